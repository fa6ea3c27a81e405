//! Pauli feature map and quantum kernel entries.
//!
//! K(x_i, x_j) = |<0^n| U(x_j)^dag U(x_i) |0^n>|^2. The ZZ-block angles
//! (pi - x_a)(pi - x_b) are products of features, which no polynomial in
//! half-angle symbols can represent, so the symbolic pipeline abstracts each
//! rotation angle as an independent parameter pair and binds the true
//! feature-derived angles numerically at evaluation time. The kernel value is
//! the squared modulus of the compiled composite amplitude; expanding the
//! squared modulus symbolically is reserved for small qubit counts.

use num_complex::Complex64;

use crate::circuit::{kernel_amplitude, Circuit};
use crate::error::{Error, Result};
use crate::expr::{compile, Bindings, EvalPlan, Expr};

/// How one abstracted rotation angle is computed from the feature vector.
#[derive(Clone, Copy, Debug)]
pub enum AngleRecipe {
    /// x_k (per-qubit Rz encoding).
    Single(usize),
    /// (pi - x_a)(pi - x_b) (ZZ interaction block).
    Pair(usize, usize),
}

impl AngleRecipe {
    pub fn value(&self, x: &[f64]) -> f64 {
        use std::f64::consts::PI;
        match *self {
            AngleRecipe::Single(k) => x[k],
            AngleRecipe::Pair(a, b) => (PI - x[a]) * (PI - x[b]),
        }
    }
}

/// Single-repetition Pauli feature map: H on every qubit, an Rz(x_k)
/// encoding rotation per qubit, and ZZ-interaction blocks
/// CNOT - Rz((pi-x_a)(pi-x_b)) - CNOT over a ring of qubit pairs
/// ((1,2), ..., (n-1,n), (n,1); a single pair at n=2), giving the pinned
/// 8 rotation parameters at 4 qubits.
#[derive(Clone, Debug)]
pub struct PauliFeatureMap {
    circuit: Circuit,
    n_qubits: u32,
    /// Angle recipe per circuit parameter, in parameter-table order.
    recipes: Vec<AngleRecipe>,
}

impl PauliFeatureMap {
    pub fn new(n_qubits: u32) -> Result<Self> {
        Self::with_prefix(n_qubits, "")
    }

    /// Parameter names get `prefix` so two maps compose without unifying.
    pub fn with_prefix(n_qubits: u32, prefix: &str) -> Result<Self> {
        if n_qubits < 2 {
            return Err(Error::UnsupportedAnsatz {
                family: "pauli-feature-map".into(),
                n_qubits,
                n_layers: 1,
            });
        }
        let mut c = Circuit::new(n_qubits);
        let mut recipes = Vec::new();
        for q in 1..=n_qubits {
            c = c.h(q);
        }
        for q in 1..=n_qubits {
            c = c.rz(q, format!("{prefix}enc_{q}"));
            recipes.push(AngleRecipe::Single((q - 1) as usize));
        }
        let pairs: Vec<(u32, u32)> = if n_qubits == 2 {
            vec![(1, 2)]
        } else {
            (1..=n_qubits)
                .map(|q| (q, if q == n_qubits { 1 } else { q + 1 }))
                .collect()
        };
        for (a, b) in pairs {
            c = c.cnot(a, b);
            c = c.rz(b, format!("{prefix}zz_{a}_{b}"));
            recipes.push(AngleRecipe::Pair((a - 1) as usize, (b - 1) as usize));
            c = c.cnot(a, b);
        }
        Ok(PauliFeatureMap { circuit: c, n_qubits, recipes })
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    /// Feature vector arity (one feature per qubit).
    pub fn arity(&self) -> usize {
        self.n_qubits as usize
    }

    /// Rotation parameter count (n single + ring pairs).
    pub fn n_parameters(&self) -> usize {
        self.recipes.len()
    }

    /// Numeric angle values aligned with the circuit parameter table.
    pub fn angle_values(&self, features: &[f64]) -> Result<Vec<f64>> {
        if features.len() != self.arity() {
            return Err(Error::FeatureDimension {
                got: features.len(),
                expected: self.arity(),
            });
        }
        Ok(self.recipes.iter().map(|r| r.value(features)).collect())
    }

    /// The map with angles bound to constants (numeric route; feeds the
    /// oracle, which accepts arbitrary angles).
    pub fn bound_circuit(&self, features: &[f64]) -> Result<Circuit> {
        let values = self.angle_values(features)?;
        let mut c = Circuit::new(self.n_qubits);
        for g in self.circuit.gates() {
            use crate::circuit::{Angle, Gate};
            let g = match *g {
                Gate::Rz { target, angle: Angle::Param(k), dag } => Gate::Rz {
                    target,
                    angle: Angle::Const(values[k as usize]),
                    dag,
                },
                g => g,
            };
            c = c.push(g);
        }
        Ok(c)
    }
}

/// Compiled kernel-entry pipeline for one feature map.
pub struct KernelPipeline {
    left: PauliFeatureMap,
    right: PauliFeatureMap,
    composite_params: Vec<String>,
    amp: Expr,
    plan: EvalPlan,
}

impl KernelPipeline {
    /// Build U(x_j)^dag U(x_i) symbolically with independent abstracted
    /// angles per side and compile the |0^n> amplitude.
    pub fn new(n_qubits: u32) -> Result<Self> {
        let left = PauliFeatureMap::with_prefix(n_qubits, "li_")?;
        let right = PauliFeatureMap::with_prefix(n_qubits, "rj_")?;
        let composite = left.circuit.compose(&right.circuit.dagger())?;
        let amp = kernel_amplitude(&left.circuit, &right.circuit)?;
        let plan = compile(&amp);
        Ok(KernelPipeline {
            left,
            right,
            composite_params: composite.params().to_vec(),
            amp,
            plan,
        })
    }

    /// The composite |0^n> amplitude expression (abstracted angles).
    pub fn amp_expr(&self) -> &Expr {
        &self.amp
    }

    pub fn plan(&self) -> &EvalPlan {
        &self.plan
    }

    pub fn arity(&self) -> usize {
        self.left.arity()
    }

    fn bindings(&self, x_i: &[f64], x_j: &[f64]) -> Result<Bindings> {
        let lv = self.left.angle_values(x_i)?;
        let rv = self.right.angle_values(x_j)?;
        let mut b = Bindings::new();
        for (k, name) in self.composite_params.iter().enumerate() {
            let v = if let Some(pos) = self.left.circuit.params().iter().position(|p| p == name) {
                lv[pos]
            } else if let Some(pos) = self.right.circuit.params().iter().position(|p| p == name) {
                rv[pos]
            } else {
                return Err(Error::UnboundParameter(name.clone()));
            };
            b.set_angle(k as u32, v);
        }
        Ok(b)
    }

    /// K(x_i, x_j): squared modulus of the compiled amplitude.
    pub fn value(&self, x_i: &[f64], x_j: &[f64]) -> Result<f64> {
        let b = self.bindings(x_i, x_j)?;
        let amp: Complex64 = self.plan.execute(&b)?;
        Ok(amp.norm_sqr())
    }

    /// Full kernel matrix over a feature set.
    pub fn matrix(&self, xs: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
        let n = xs.len();
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = self.value(&xs[i], &xs[j])?;
            }
        }
        Ok(m)
    }
}

/// Kernel entry as a fully expanded expression plus its numeric value.
/// Feasible only at small qubit counts; the pipeline above is the scalable
/// route.
pub fn kernel_entry_expr(n_qubits: u32) -> Result<(KernelPipeline, Expr)> {
    let pipeline = KernelPipeline::new(n_qubits)?;
    let amp = pipeline.amp_expr();
    let k = amp * &amp.conj();
    Ok((pipeline, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{oracle_numeric, MeasurementSpec, OracleInput};

    #[test]
    fn four_qubit_map_has_eight_parameters() {
        let m = PauliFeatureMap::new(4).unwrap();
        assert_eq!(m.n_parameters(), 8);
        assert_eq!(m.circuit().n_params(), 8);
    }

    #[test]
    fn identical_features_give_unit_kernel() {
        let p = KernelPipeline::new(3).unwrap();
        let x = vec![0.4, -1.2, 2.2];
        let k = p.value(&x, &x).unwrap();
        assert!((k - 1.0).abs() < 1e-10, "K(x,x) = {k}");
    }

    #[test]
    fn kernel_is_symmetric() {
        let p = KernelPipeline::new(2).unwrap();
        for t in 0..20 {
            let x = vec![0.3 + 0.11 * t as f64, -0.7 + 0.05 * t as f64];
            let y = vec![1.9 - 0.13 * t as f64, 0.45 + 0.21 * t as f64];
            let kxy = p.value(&x, &y).unwrap();
            let kyx = p.value(&y, &x).unwrap();
            assert!((kxy - kyx).abs() < 1e-12);
        }
    }

    #[test]
    fn pipeline_matches_oracle_at_four_qubits() {
        let p = KernelPipeline::new(4).unwrap();
        let left = PauliFeatureMap::new(4).unwrap();
        for t in 0..10 {
            let x: Vec<f64> = (0..4).map(|k| 0.2 + 0.31 * k as f64 + 0.17 * t as f64).collect();
            let y: Vec<f64> = (0..4).map(|k| -0.5 + 0.27 * k as f64 - 0.11 * t as f64).collect();
            let via_plan = p.value(&x, &y).unwrap();
            let ci = left.bound_circuit(&x).unwrap();
            let cj = left.bound_circuit(&y).unwrap();
            let spec = MeasurementSpec::KernelEntry { other: cj };
            let via_oracle = oracle_numeric(&ci, &spec, &[], &OracleInput::FromCircuit)
                .unwrap()
                .re;
            assert!(
                (via_plan - via_oracle).abs() < 1e-9,
                "trial {t}: plan {via_plan} vs oracle {via_oracle}"
            );
        }
    }

    #[test]
    fn zero_features_still_compute() {
        let p = KernelPipeline::new(2).unwrap();
        let k = p.value(&[0.0, 0.0], &[0.0, 0.0]).unwrap();
        assert!((k - 1.0).abs() < 1e-10);
    }

    #[test]
    fn expanded_entry_matches_pipeline_at_two_qubits() {
        let (p, k_expr) = kernel_entry_expr(2).unwrap();
        let x = vec![0.8, -0.3];
        let y = vec![-1.1, 0.6];
        let b = p.bindings(&x, &y).unwrap();
        let via_expr = crate::expr::eval_numeric(&k_expr, &b).unwrap();
        let via_plan = p.value(&x, &y).unwrap();
        assert!((via_expr.re - via_plan).abs() < 1e-10);
        assert!(via_expr.im.abs() < 1e-12);
    }

    #[test]
    fn wrong_arity_rejected() {
        let p = KernelPipeline::new(3).unwrap();
        assert!(p.value(&[0.1, 0.2], &[0.1, 0.2, 0.3]).is_err());
    }
}
