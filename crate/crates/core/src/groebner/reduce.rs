use crate::error::Result;
use crate::polyarith::{Polynomial, Term};

/// Full multivariate division of `f` by `divisors`.
///
/// Returns a remainder none of whose terms is divisible by a leading
/// monomial of a nonzero divisor. At each step the first divisor (in list
/// order) whose leading monomial divides the current leading term is used.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    for g in divisors {
        f.ring().check_same(g.ring())?;
    }
    let divisors: Vec<&Polynomial> = divisors.iter().filter(|g| !g.is_zero()).collect();
    Ok(reduce_unchecked(f, &divisors))
}

pub(crate) fn reduce_unchecked(f: &Polynomial, divisors: &[&Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lead) = p.leading_term() {
        let hit = divisors.iter().find_map(|g| {
            let lt = g.leading_term().expect("divisors are nonzero");
            lt.monomial.quotient_of(&lead.monomial).map(|q| (g, lt, q))
        });
        match hit {
            Some((g, lt, q)) => {
                let c = lead
                    .coeff
                    .div(&lt.coeff)
                    .expect("leading coefficient is nonzero");
                p = p.sub_mul_term(&c, &q, g);
            }
            None => {
                // terms leave p in descending order, so rem stays sorted
                rem.extend(p.pop_leading());
            }
        }
    }
    Polynomial::from_sorted_terms(f.ring(), rem)
}
