//! Trace forms of étale algebras over Q and the checks built on them.
//!
//! An algebra is a product of fields `Q[x]/(f)`, each with a multiplicity.
//! The trace form of `Q[x]/(f)` is read off the power basis: its Gram
//! matrix has entries `p_{i+j}`, the Newton power sums of `f`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cohomology::is_2_reduced;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hilbert::{cup, BrauerSet};
use crate::poly::MonicPoly;
use crate::qform::{Gram, QForm};
use crate::report::{Basis, VerificationReport};
use crate::squareclass::SquareClass;

pub fn trace_gram(f: &MonicPoly) -> Result<Gram> {
    if !f.is_separable() {
        return Err(Error::Inseparable);
    }
    let d = f.degree();
    let p = f.power_sums(2 * d.saturating_sub(1));
    let entries = (0..d * d)
        .map(|k| crate::numeric::Rational::from_integer(p[k / d + k % d].clone()))
        .collect();
    Gram::new(d, entries)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EtaleAlg {
    factors: Vec<(MonicPoly, usize)>,
}

#[derive(Deserialize)]
struct FactorSpec {
    poly: Vec<i64>,
    #[serde(default = "one")]
    multiplicity: usize,
}

fn one() -> usize {
    1
}

impl EtaleAlg {
    pub fn new(factors: Vec<(MonicPoly, usize)>) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|(_, m)| *m == 0) {
            return Err(Error::OutOfRange("an algebra needs a factor of multiplicity ≥ 1".into()));
        }
        for (f, _) in &factors {
            if !f.is_separable() {
                return Err(Error::Inseparable);
            }
        }
        Ok(EtaleAlg { factors })
    }

    pub fn field(f: MonicPoly) -> Result<Self> {
        Self::new(vec![(f, 1)])
    }

    /// `Q^n`.
    pub fn split(n: usize) -> Result<Self> {
        Self::new(vec![(MonicPoly::from_i64(&[1, -1])?, n)])
    }

    /// `[{"poly": [1,0,-2], "multiplicity": 2}, …]`.
    pub fn from_json(text: &str) -> Result<Self> {
        let specs: Vec<FactorSpec> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("algebra JSON: {e}")))?;
        let factors = specs
            .into_iter()
            .map(|s| Ok((MonicPoly::from_i64(&s.poly)?, s.multiplicity)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }

    pub fn factors(&self) -> &[(MonicPoly, usize)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(f, m)| f.degree() * m).sum()
    }

    pub fn trace_form(&self) -> Result<QForm> {
        let mut out = QForm::new(Vec::new())?;
        for (f, m) in &self.factors {
            out = out.direct_sum(&trace_gram(f)?.diagonalize()?.copies(*m));
        }
        Ok(out)
    }

    pub fn disc(&self) -> Result<SquareClass> {
        self.trace_form()?.w1()
    }

    pub fn is_totally_real(&self) -> Result<bool> {
        let q = self.trace_form()?;
        Ok(q.signature() == (q.rank(), 0))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.factors
                .iter()
                .map(|(f, m)| {
                    let coeffs: Vec<String> = f.coeffs().iter().map(|c| c.to_string()).collect();
                    json!({"poly": coeffs, "multiplicity": m})
                })
                .collect(),
        )
    }
}

/// What is known about the Galois structure of an algebra. Galois-ness is
/// asserted by the caller, not verified.
#[derive(Clone, Debug, Serialize)]
pub struct GaloisDescriptor {
    pub order: usize,
    pub sylow_cyclic: bool,
    pub sylow_noncyclic: bool,
    pub two_reduced: bool,
    /// Whether the Galois representation is onto `G` (image index 1).
    pub surjective: bool,
}

#[derive(Deserialize)]
struct DescriptorFlags {
    order: usize,
    sylow_cyclic: bool,
    #[serde(default)]
    sylow_noncyclic: Option<bool>,
    two_reduced: bool,
    #[serde(default = "yes")]
    surjective: bool,
}

fn yes() -> bool {
    true
}

impl GaloisDescriptor {
    /// Flags computed from the group itself.
    pub fn from_group(group: &Group, surjective: bool) -> Result<Self> {
        let cyclic = group.sylow2().is_cyclic();
        Ok(GaloisDescriptor {
            order: group.order(),
            sylow_cyclic: cyclic,
            sylow_noncyclic: !cyclic,
            two_reduced: is_2_reduced(group)?,
            surjective,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: DescriptorFlags =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("descriptor JSON: {e}")))?;
        let d = GaloisDescriptor {
            order: f.order,
            sylow_cyclic: f.sylow_cyclic,
            sylow_noncyclic: f.sylow_noncyclic.unwrap_or(!f.sylow_cyclic),
            two_reduced: f.two_reduced,
            surjective: f.surjective,
        };
        if d.sylow_cyclic == d.sylow_noncyclic {
            return Err(Error::InconsistentDescriptor(
                "exactly one of sylow_cyclic and sylow_noncyclic must hold".into(),
            ));
        }
        Ok(d)
    }

    /// Checks the descriptor against the algebra and returns the index of
    /// the image of the Galois representation. A Galois algebra that is `m`
    /// copies of a field has image of index `m`.
    pub fn image_index(&self, alg: &EtaleAlg) -> Result<usize> {
        if self.sylow_cyclic == self.sylow_noncyclic {
            return Err(Error::InconsistentDescriptor("Sylow flags contradict each other".into()));
        }
        if alg.degree() != self.order {
            return Err(Error::InconsistentDescriptor(format!(
                "algebra of degree {} for a group of order {}",
                alg.degree(),
                self.order
            )));
        }
        let m = match alg.factors() {
            [(_, m)] => *m,
            _ => {
                return Err(Error::InconsistentDescriptor(
                    "a Galois algebra is a power of a single field".into(),
                ))
            }
        };
        if self.surjective && m != 1 {
            return Err(Error::InconsistentDescriptor(format!(
                "surjective representation but {m} copies of a field"
            )));
        }
        Ok(m)
    }

    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("descriptor serializes")
    }
}

fn places(b: &BrauerSet) -> Value {
    serde_json::to_value(b).expect("places serialize")
}

/// `w1(q_L)` is trivial iff the Sylow 2-subgroups are non-cyclic or the
/// image has even index.
pub fn verify_w1(alg: &EtaleAlg, desc: &GaloisDescriptor) -> Result<VerificationReport> {
    let m = desc.image_index(alg)?;
    let w1 = alg.disc()?;
    let predicate = desc.sylow_noncyclic || m % 2 == 0;
    let inputs = json!({"algebra": alg.to_json(), "descriptor": desc.to_json()});
    if alg.degree() % 2 == 1 {
        return Ok(VerificationReport::skipped("prop-ww1", inputs, "odd degree"));
    }
    Ok(VerificationReport::compare(
        "prop-ww1",
        inputs,
        json!({"w1_trivial": w1.is_one()}),
        json!({"w1_trivial": predicate}),
        Basis::Theorem,
    )
    .with_details(json!({"w1": w1.to_string(), "image_index": m})))
}

fn degree_gate(n: usize) -> bool {
    n % 8 == 0 || n % 8 == 2
}

/// `w2(q_L) = (2)·(d_L)` for 2-reduced `G` and `n ≡ 0, 2 mod 8`.
pub fn verify_main(alg: &EtaleAlg, desc: &GaloisDescriptor) -> Result<VerificationReport> {
    desc.image_index(alg)?;
    let n = alg.degree();
    let inputs = json!({"algebra": alg.to_json(), "descriptor": desc.to_json()});
    if !desc.two_reduced {
        return Ok(VerificationReport::skipped("thm-main", inputs, "group is not 2-reduced"));
    }
    if !degree_gate(n) {
        return Ok(VerificationReport::skipped(
            "thm-main",
            inputs,
            format!("degree {n} is not 0 or 2 mod 8"),
        ));
    }
    let q = alg.trace_form()?;
    let lhs = q.w2()?;
    let rhs = cup(&SquareClass::from_int(2)?, &q.w1()?);
    Ok(VerificationReport::compare(
        "thm-main",
        inputs,
        json!({"w2": places(&lhs)}),
        json!({"w2": places(&rhs)}),
        Basis::Theorem,
    ))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Numb2Case {
    I,
    Ii,
    Iii,
    Iv,
}

impl Numb2Case {
    pub fn label(self) -> &'static str {
        match self {
            Numb2Case::I => "i",
            Numb2Case::Ii => "ii",
            Numb2Case::Iii => "iii",
            Numb2Case::Iv => "iv",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Numb2Result {
    pub case: Numb2Case,
    pub predicted: QForm,
    pub trace_form: QForm,
    pub verdict: bool,
}

impl Numb2Result {
    pub fn to_report(&self, alg: &EtaleAlg) -> VerificationReport {
        VerificationReport::compare(
            &format!("cor-numb2-{}", self.case.label()),
            json!({"algebra": alg.to_json()}),
            json!({"isometric": self.verdict}),
            json!({"isometric": true}),
            Basis::Theorem,
        )
        .with_details(json!({
            "case": self.case.label(),
            "trace_form": self.trace_form.to_strings(),
            "predicted_form": self.predicted.to_strings(),
        }))
    }
}

/// Predicts the isometry class of the trace form of a Galois algebra over
/// Q of degree `0` or `2 mod 8` with 2-reduced group, and compares.
pub fn classify_numb2(alg: &EtaleAlg, desc: &GaloisDescriptor) -> Result<Numb2Result> {
    desc.image_index(alg)?;
    let n = alg.degree();
    if !degree_gate(n) {
        return Err(Error::OutOfRange(format!("degree {n} is not 0 or 2 mod 8")));
    }
    if !desc.two_reduced {
        return Err(Error::InconsistentDescriptor("group is not 2-reduced".into()));
    }
    let q = alg.trace_form()?;
    let (pos, neg) = q.signature();
    let real = neg == 0;
    if !real && pos != neg {
        return Err(Error::MixedSignature(pos, neg));
    }
    let d = q.w1()?;
    let dq = crate::numeric::Rational::from_integer(d.value());
    let two = crate::numeric::rat(2);
    let half = n / 2;
    let (case, predicted) = match (real, desc.sylow_cyclic) {
        (true, false) => (Numb2Case::I, QForm::unit(n)),
        (false, false) => (Numb2Case::Ii, QForm::hyperbolic(half)),
        (true, true) => (
            Numb2Case::Iii,
            QForm::new(vec![two.clone(), &two * &dq])?.direct_sum(&QForm::unit(n - 2)),
        ),
        (false, true) => {
            let sign = if (half - 1) % 2 == 0 { 1 } else { -1 };
            let tail = QForm::new(vec![crate::numeric::rat(2 * sign), &two * &dq])?;
            (Numb2Case::Iv, QForm::hyperbolic(half - 1).direct_sum(&tail))
        }
    };
    let verdict = q.is_isometric(&predicted)?;
    Ok(Numb2Result {
        case,
        predicted,
        trace_form: q,
        verdict,
    })
}

/// For `S = S_1 × S_2` with `|S_2| ≥ 4`: `w2(q_L) = (d_1 d_2)·(d_2)` when
/// `S` has a direct factor of order 2, `(d_1)·(d_2)` otherwise.
pub fn verify_two_cyclic_sylow(
    alg: &EtaleAlg,
    d1: &SquareClass,
    d2: &SquareClass,
    factor_of_order_2: bool,
) -> Result<VerificationReport> {
    let n = alg.degree();
    let inputs = json!({
        "algebra": alg.to_json(),
        "d1": d1.to_string(),
        "d2": d2.to_string(),
        "factor_of_order_2": factor_of_order_2,
    });
    if n.trailing_zeros() < 3 {
        return Ok(VerificationReport::skipped(
            "prop-two-cyclic",
            inputs,
            "needs a 2-part of order ≥ 8 with one cyclic factor of order ≥ 4",
        ));
    }
    let lhs = alg.trace_form()?.w2()?;
    let rhs = if factor_of_order_2 {
        cup(&d1.mul(d2), d2)
    } else {
        cup(d1, d2)
    };
    Ok(VerificationReport::compare(
        "prop-two-cyclic",
        inputs,
        json!({"w2": places(&lhs)}),
        json!({"w2": places(&rhs)}),
        Basis::Theorem,
    ))
}
