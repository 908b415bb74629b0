//! Trace moments of words in a multiplication operator and its adjoint.
//!
//! A word `r_1 ... r_n` over `{1, *}` picks `M_h` or `M_h*` at each
//! position; its moment is `tau(M^{r_1} ... M^{r_n}) = tau(h^{e_1} ... h^{e_n})`
//! with `e_l` the identity or the hypercomplex conjugate.
//!
//! When `h` is similar to `(s, 0)` for its spectral value `s = r e^{i theta}`
//! the moment collapses to `r^n cos(theta * sum(eps_l))`, where `eps_l` is
//! `+1` for a plain letter and `-1` for a starred one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::operators::MulOperator;
use crate::ring::Hypercomplex;
use crate::scale::Regime;
use crate::spectral::{similarity_witness, spectralize};

/// Longest word accepted; keeps `r^n` away from overflow.
pub const MAX_WORD_LEN: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Plain,
    Star,
}

impl Letter {
    /// `+1` for `Plain`, `-1` for `Star`.
    pub fn sign(self) -> i32 {
        match self {
            Letter::Plain => 1,
            Letter::Star => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Letter::Plain => 'P',
            Letter::Star => 'S',
        }
    }
}

/// A nonempty word of at most [`MAX_WORD_LEN`] letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MomentWord {
    letters: Vec<Letter>,
}

impl MomentWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() || letters.len() > MAX_WORD_LEN {
            return Err(Error::WordLength(letters.len()));
        }
        Ok(MomentWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `sum(eps_l)`.
    pub fn signed_count(&self) -> i32 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// All `2^n` words of length `n`, in binary order with `Plain` as 0 and
    /// the first letter most significant.
    pub fn all_of_length(n: usize) -> Result<Vec<MomentWord>> {
        if n == 0 || n > MAX_WORD_LEN {
            return Err(Error::WordLength(n));
        }
        Ok((0u32..1 << n)
            .map(|bits| {
                let letters = (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 1 {
                            Letter::Star
                        } else {
                            Letter::Plain
                        }
                    })
                    .collect();
                MomentWord { letters }
            })
            .collect())
    }

    /// All words of length `1..=max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> Result<Vec<MomentWord>> {
        let mut out = Vec::new();
        for n in 1..=max_len {
            out.extend(Self::all_of_length(n)?);
        }
        Ok(out)
    }
}

impl fmt::Display for MomentWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

/// Parses words written over `P`/`S` (or `1`/`*`).
impl FromStr for MomentWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|ch| match ch {
                'P' | 'p' | '1' => Ok(Letter::Plain),
                'S' | 's' | '*' => Ok(Letter::Star),
                other => Err(Error::InvalidArgument(format!(
                    "unexpected letter {other:?} in moment word"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        MomentWord::new(letters)
    }
}

/// `tau(M) = Re(a)` of the symbol.
pub fn tau_op(m: &MulOperator) -> f64 {
    m.symbol().trace_tau()
}

/// Folds the product of `h` / `conj(h)` left to right and takes the trace.
pub fn free_moment_direct(h: &Hypercomplex, word: &MomentWord) -> f64 {
    let star = h.conjugate();
    let product = word
        .letters()
        .iter()
        .fold(Hypercomplex::one(h.scale()), |acc, l| {
            let factor = match l {
                Letter::Plain => h,
                Letter::Star => &star,
            };
            acc.mul(factor).expect("factors share the scale of h")
        });
    product.trace_tau()
}

/// Whether `h` is known to be similar to `(spectral value, 0)`: always for
/// `t < 0` or `b = 0`, otherwise only if a witness verifies.
pub fn similarity_verified(h: &Hypercomplex) -> bool {
    if h.scale().regime() == Regime::Negative {
        return true;
    }
    matches!(similarity_witness(h), Ok(Some(_)))
}

/// `r^n cos(theta * sum(eps_l))` with `r e^{i theta}` the spectral value
/// (principal argument). `None` when similarity cannot be verified.
pub fn free_moment_closed(h: &Hypercomplex, word: &MomentWord) -> Option<f64> {
    if !similarity_verified(h) {
        return None;
    }
    Some(closed_form_value(h, word))
}

fn closed_form_value(h: &Hypercomplex, word: &MomentWord) -> f64 {
    let sigma = spectralize(h).value;
    let (r, theta) = sigma.to_polar();
    r.powi(word.len() as i32) * (theta * f64::from(word.signed_count())).cos()
}

/// One row of a moment sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentRow {
    pub word: MomentWord,
    pub direct: f64,
    pub closed: Option<f64>,
}

impl MomentRow {
    pub fn abs_diff(&self) -> Option<f64> {
        self.closed.map(|c| (c - self.direct).abs())
    }
}

/// Direct and closed-form moments for every word up to `max_len`.
pub fn moment_table(h: &Hypercomplex, max_len: usize) -> Result<Vec<MomentRow>> {
    let words = MomentWord::all_up_to(max_len)?;
    let similar = similarity_verified(h);
    Ok(words
        .into_iter()
        .map(|word| {
            let direct = free_moment_direct(h, &word);
            let closed = similar.then(|| closed_form_value(h, &word));
            MomentRow {
                word,
                direct,
                closed,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scale::Scale;
    use num_complex::Complex64;

    fn s(t: f64) -> Scale {
        Scale::new(t).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn word(w: &str) -> MomentWord {
        w.parse().unwrap()
    }

    #[test]
    fn word_bounds() {
        assert_eq!(MomentWord::new(vec![]), Err(Error::WordLength(0)));
        assert!(MomentWord::new(vec![Letter::Plain; MAX_WORD_LEN]).is_ok());
        assert_eq!(
            MomentWord::new(vec![Letter::Star; MAX_WORD_LEN + 1]),
            Err(Error::WordLength(MAX_WORD_LEN + 1))
        );
        assert!("PXS".parse::<MomentWord>().is_err());
    }

    #[test]
    fn word_enumeration() {
        let words = MomentWord::all_of_length(2).unwrap();
        let names: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["PP", "PS", "SP", "SS"]);
        assert_eq!(MomentWord::all_up_to(6).unwrap().len(), 126);
        assert_eq!(word("1*1").to_string(), "PSP");
    }

    #[test]
    fn tau_op_examples() {
        let t = s(0.5);
        assert_eq!(tau_op(&MulOperator::new(Hypercomplex::one(t))), 1.0);
        let m = MulOperator::new(Hypercomplex::new(c(3.0, 4.0), c(7.0, 0.0), t));
        assert_eq!(tau_op(&m), 3.0);

        let h = Hypercomplex::new(c(0.4, -1.0), c(0.9, 0.3), t);
        let hh = h.mul(&h.conjugate()).unwrap();
        assert!((tau_op(&MulOperator::new(hh)) - h.det()).abs() < 1e-15);
    }

    #[test]
    fn direct_examples() {
        let t = s(-0.7);
        let h = Hypercomplex::new(c(1.3, 0.2), c(-0.4, 2.0), t);
        assert_eq!(free_moment_direct(&h, &word("P")), 1.3);
        assert!((free_moment_direct(&h, &word("PS")) - h.det()).abs() < 1e-14);

        let i = Hypercomplex::new(c(0.0, 1.0), c(0.0, 0.0), s(-1.0));
        assert_eq!(free_moment_direct(&i, &word("PP")), -1.0);
    }

    #[test]
    fn closed_examples() {
        let i = Hypercomplex::new(c(0.0, 1.0), c(0.0, 0.0), s(-1.0));
        let v = free_moment_closed(&i, &word("PP")).unwrap();
        assert!((v + 1.0).abs() < 1e-15);

        let h = Hypercomplex::new(c(1.3, 0.2), c(-0.4, 2.0), s(-0.7));
        let r = spectralize(&h).value.norm();
        let v = free_moment_closed(&h, &word("PS")).unwrap();
        assert!((v - r * r).abs() < 1e-13);

        let x = Hypercomplex::real(1.7, s(2.0));
        for n in 1..=6 {
            let w = MomentWord::new(vec![Letter::Plain; n]).unwrap();
            let v = free_moment_closed(&x, &w).unwrap();
            assert!((v - 1.7f64.powi(n as i32)).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_matches_direct_for_negative_scale() {
        let h = Hypercomplex::new(c(0.6, -0.8), c(1.1, 0.5), s(-2.0));
        for w in MomentWord::all_up_to(5).unwrap() {
            let d = free_moment_direct(&h, &w);
            let cl = free_moment_closed(&h, &w).unwrap();
            let r = spectralize(&h).value.norm();
            assert!(
                (d - cl).abs() <= 1e-10 * r.powi(w.len() as i32).max(1.0),
                "{w}"
            );
        }
    }

    #[test]
    fn closed_not_applicable_without_similarity() {
        let null = Hypercomplex::from_reals(1.0, 0.0, 1.0, 0.0, s(1.0));
        assert_eq!(free_moment_closed(&null, &word("PP")), None);
        let dual = Hypercomplex::from_reals(1.0, 0.0, 1.0, 0.0, s(0.0));
        assert_eq!(free_moment_closed(&dual, &word("P")), None);
    }

    #[test]
    fn closed_holds_on_verified_positive_scale() {
        let h = Hypercomplex::new(c(0.5, 2.0), c(1.0, 0.5), s(1.0));
        for w in MomentWord::all_up_to(4).unwrap() {
            let cl = free_moment_closed(&h, &w).expect("witness verifies");
            assert!((cl - free_moment_direct(&h, &w)).abs() < 1e-10);
        }
    }

    #[test]
    fn moments_are_tracial() {
        let t = s(1.5);
        let m1 = MulOperator::new(Hypercomplex::new(c(0.2, 1.0), c(-1.0, 0.4), t));
        let m2 = MulOperator::new(Hypercomplex::new(c(-0.7, 0.3), c(0.5, 0.5), t));
        let ab = tau_op(&m1.compose(&m2).unwrap());
        let ba = tau_op(&m2.compose(&m1).unwrap());
        assert!((ab - ba).abs() < 1e-14);
    }

    #[test]
    fn table_marks_not_applicable() {
        let null = Hypercomplex::from_reals(1.0, 0.0, 1.0, 0.0, s(1.0));
        let rows = moment_table(&null, 2).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows
            .iter()
            .all(|r| r.closed.is_none() && r.abs_diff().is_none()));
    }
}
