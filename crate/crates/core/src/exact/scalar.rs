use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar, always stored in lowest terms with a positive
/// denominator. All curvature coefficients in this crate live here.
///
/// Serializes as `"p/q"`, with `/q` omitted when the denominator is 1;
/// this is the built-in `Display` of [`BigRational`].
pub type Scalar = BigRational;

/// Shorthand for a rational `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses the `"p/q"` wire format (also plain `"p"`).
pub fn scalar_from_str(s: &str) -> Option<Scalar> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(Scalar::new(p, q))
        }
        None => {
            let p: BigInt = s.trim().parse().ok()?;
            Some(Scalar::from(p))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let x = rat(6, -4);
        assert_eq!(x, rat(-3, 2));
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(rat(5, 1).to_string(), "5");
    }

    #[test]
    fn wire_format_round_trip() {
        for s in ["0", "-3/2", "5", "22/7"] {
            let x = scalar_from_str(s).unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert!(scalar_from_str("1/0").is_none());
        assert!(scalar_from_str("x").is_none());
        assert!(scalar_from_str("4/6").unwrap() == rat(2, 3));
    }

    #[test]
    fn arithmetic_is_exact() {
        // 1/3 + 1/6 = 1/2 with no rounding residue.
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        assert!((rat(1, 3) * rat(3, 1) - rat(1, 1)).is_zero());
    }
}
