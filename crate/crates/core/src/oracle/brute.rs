//! Brute-force finite-word regex matching by recursion over all split
//! points. Complement is plain negation, star tries every nonempty first
//! factor. Exponential, capped, and entirely independent of derivatives.

use crate::algebra::Letter;
use crate::ere::{Regex, RegexView};
use crate::error::{Error, Result};

pub const BRUTE_CAP: usize = 8;

pub fn brute_match(r: &Regex, word: &[Letter]) -> Result<bool> {
    if word.len() > BRUTE_CAP {
        return Err(Error::WordTooLong { len: word.len(), cap: BRUTE_CAP });
    }
    for a in word {
        r.algebra().check_letter(a)?;
    }
    Ok(go(r, word))
}

fn go(r: &Regex, w: &[Letter]) -> bool {
    match r.view() {
        RegexView::Pred(p) => w.len() == 1 && p.denotes(&w[0]),
        RegexView::Eps => w.is_empty(),
        RegexView::Union(xs) => xs.iter().any(|x| go(x, w)),
        RegexView::Inter(xs) => xs.iter().all(|x| go(x, w)),
        RegexView::Concat(a, b) => (0..=w.len()).any(|i| go(a, &w[..i]) && go(b, &w[i..])),
        RegexView::Star(a) => {
            w.is_empty() || (1..=w.len()).any(|i| go(a, &w[..i]) && go(r, &w[i..]))
        }
        RegexView::Compl(a) => !go(a, w),
        RegexView::Fusion(a, b) => {
            (0..w.len()).any(|i| go(a, &w[..=i]) && go(b, &w[i..]))
        }
    }
}
