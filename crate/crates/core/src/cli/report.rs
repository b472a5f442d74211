//! Classification reports in text and JSON form.

use std::fmt::Write as _;

use serde::Serialize;

use super::io::matrix_strings;
use crate::cyclic::{bdsw_sign_classify, cyclic_products, is_bdsw, is_full, is_inverse_cyclic, Verdict};
use crate::matcore::{inverse, to_decimal, Matrix, Rational};
use crate::zclass::{is_z, ClassReport, Classifier};
use crate::Result;

/// Inverse-cyclic and bdsw facts reported next to a [`ClassReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicInfo {
    pub d: Rational,
    pub c: Rational,
    pub is_full: bool,
    pub inverse_cyclic: bool,
    pub is_bdsw: bool,
    pub verdict: Verdict,
    /// Present when the matrix is nonsingular and within the order cap.
    pub inverse: Option<Matrix>,
}

impl CyclicInfo {
    pub fn of(a: &Matrix, classifier: &Classifier) -> Self {
        let p = cyclic_products(a);
        let inverse = if a.order() <= classifier.cap() { inverse(a).ok() } else { None };
        Self {
            d: p.d,
            c: p.c,
            is_full: is_full(a),
            inverse_cyclic: is_inverse_cyclic(a),
            is_bdsw: is_bdsw(a),
            verdict: bdsw_sign_classify(a),
            inverse,
        }
    }

    pub fn d_minus_c(&self) -> Rational {
        &self.d - &self.c
    }
}

/// Taxonomy plus cyclic facts for one matrix.
pub fn describe(a: &Matrix, classifier: &Classifier) -> Result<(ClassReport, CyclicInfo)> {
    Ok((classifier.classify(a)?, CyclicInfo::of(a, classifier)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct ReportJson {
    n: usize,
    determinant: String,
    is_nonsingular: bool,
    irreducible: bool,
    is_z: bool,
    is_m: bool,
    l_index: Option<usize>,
    is_nonsingular_m: bool,
    is_n: bool,
    is_n0: bool,
    is_f0: bool,
    d: String,
    c: String,
    d_minus_c: String,
    is_full: bool,
    inverse_cyclic: bool,
    is_bdsw: bool,
    inverse_is_z: Option<bool>,
    inverse_is_bdsw: Option<bool>,
    verdict: Verdict,
    inverse: Option<Vec<Vec<String>>>,
}

/// Deterministic serialization of a report. JSON is compact, one object.
pub fn emit_report(r: &ClassReport, info: &CyclicInfo, format: ReportFormat) -> String {
    let inverse_is_z = info.inverse.as_ref().map(is_z);
    let inverse_is_bdsw = info.inverse.as_ref().map(is_bdsw);
    match format {
        ReportFormat::Json => {
            let doc = ReportJson {
                n: r.order,
                determinant: r.determinant.to_string(),
                is_nonsingular: r.is_nonsingular,
                irreducible: r.irreducible,
                is_z: r.is_z,
                is_m: r.is_m,
                l_index: r.l_index,
                is_nonsingular_m: r.is_nonsingular_m,
                is_n: r.is_n,
                is_n0: r.is_n0,
                is_f0: r.is_f0,
                d: info.d.to_string(),
                c: info.c.to_string(),
                d_minus_c: info.d_minus_c().to_string(),
                is_full: info.is_full,
                inverse_cyclic: info.inverse_cyclic,
                is_bdsw: info.is_bdsw,
                inverse_is_z,
                inverse_is_bdsw,
                verdict: info.verdict,
                inverse: info.inverse.as_ref().map(matrix_strings),
            };
            serde_json::to_string(&doc).expect("report is serializable")
        }
        ReportFormat::Text => {
            let yn = |b: bool| if b { "yes" } else { "no" };
            let opt = |b: Option<bool>| b.map_or("n/a", yn);
            let mut out = String::new();
            let _ = writeln!(out, "order:              {}", r.order);
            let _ = writeln!(out, "determinant:        {}", r.determinant);
            let _ = writeln!(out, "nonsingular:        {}", yn(r.is_nonsingular));
            let _ = writeln!(out, "irreducible:        {}", yn(r.irreducible));
            let _ = writeln!(out, "Z-matrix:           {}", yn(r.is_z));
            let _ = writeln!(out, "M-matrix:           {}", yn(r.is_m));
            let _ = writeln!(out, "nonsingular M:      {}", yn(r.is_nonsingular_m));
            let _ = writeln!(out, "N-matrix:           {}", yn(r.is_n));
            let _ = writeln!(out, "N0-matrix:          {}", yn(r.is_n0));
            let _ = writeln!(out, "F0-matrix:          {}", yn(r.is_f0));
            let _ = writeln!(out, "L_s index:          {}", r.l_index.map_or("n/a".into(), |s| s.to_string()));
            let _ = writeln!(out, "d:                  {}", info.d);
            let _ = writeln!(out, "c:                  {}", info.c);
            let _ = writeln!(out, "d - c:              {}", info.d_minus_c());
            let _ = writeln!(out, "full:               {}", yn(info.is_full));
            let _ = writeln!(out, "inverse cyclic:     {}", yn(info.inverse_cyclic));
            let _ = writeln!(out, "bdsw:               {}", yn(info.is_bdsw));
            let _ = writeln!(out, "inverse is Z:       {}", opt(inverse_is_z));
            let _ = writeln!(out, "inverse is bdsw:    {}", opt(inverse_is_bdsw));
            let _ = writeln!(out, "verdict:            {:?}", info.verdict);
            if let Some(inv) = &info.inverse {
                let _ = writeln!(out, "inverse:\n{inv}");
            }
            out
        }
    }
}

/// `rho_r` estimate rendered as the exact bracket plus a decimal value.
pub fn format_perron(r: usize, lower: &Rational, upper: &Rational, value: &Rational) -> String {
    format!("rho_{r}(B) in ({lower}, {upper}] ~ {}", to_decimal(value, 9))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::rat;

    fn json_of(a: &Matrix) -> String {
        let c = Classifier::default();
        let (r, info) = describe(a, &c).unwrap();
        emit_report(&r, &info, ReportFormat::Json)
    }

    #[test]
    fn identity_json() {
        let s = json_of(&Matrix::identity(2));
        assert!(s.contains(r#""l_index":2,"is_nonsingular_m":true"#), "{s}");
    }

    #[test]
    fn bdsw_m_example_json() {
        let a =
            Matrix::from_ints(&[[4, 4, 8, 4, 4], [1, 2, 4, 2, 2], [1, 1, 4, 2, 2], [2, 2, 4, 4, 4], [2, 2, 4, 2, 4]]);
        let s = json_of(&a);
        assert!(s.contains(r#""inverse_is_bdsw":true,"verdict":"InverseM""#), "{s}");
        assert!(s.contains(r#""d_minus_c":"256""#));
    }

    #[test]
    fn wrong_parity_inverse_not_z_json() {
        let a = Matrix::from_fn(5, |i, j| if i <= j { rat(-2, 1) } else { rat(-1, 1) });
        let s = json_of(&a);
        assert!(s.contains(r#""inverse_is_z":false"#), "{s}");
        assert!(s.contains(r#""verdict":"Neither""#));
    }

    #[test]
    fn byte_stable() {
        let a = Matrix::from_ints(&[[1, -1, -1], [-2, 1, 1], [2, -2, -1]]);
        assert_eq!(json_of(&a), json_of(&a));
        let c = Classifier::default();
        let (r, info) = describe(&a, &c).unwrap();
        let t = emit_report(&r, &info, ReportFormat::Text);
        assert!(t.contains("inverse cyclic:     yes"));
        assert_eq!(t, emit_report(&r, &info, ReportFormat::Text));
    }

    #[test]
    fn singular_json_has_no_inverse() {
        let s = json_of(&Matrix::zeros(2));
        assert!(s.contains(r#""inverse_is_z":null"#) && s.contains(r#""inverse":null"#), "{s}");
    }
}
