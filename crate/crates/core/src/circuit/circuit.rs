//! Circuit IR: gate list over n qubits with named symbolic parameters.
//!
//! Qubit labels are 1-based and qubit 1 is the most significant bit of the
//! basis index. Inputs are |0^n>, a separable symbolic state with real
//! amplitude pairs (a_i, b_i), or an explicit numeric vector.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gate::{Angle, Gate};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum InputSpec {
    Zeros,
    /// Separable symbolic input with real per-qubit amplitudes a_i, b_i.
    Separable,
    Explicit(Vec<Complex64>),
}

#[derive(Clone, Debug)]
pub struct Circuit {
    n_qubits: u32,
    input: InputSpec,
    gates: Vec<Gate>,
    /// Parameter table: index -> name. Rotation angles reference entries.
    params: Vec<String>,
}

/// Angle argument for the builder API: a parameter name or a constant.
pub enum AngleArg {
    Name(String),
    Value(f64),
}

impl From<&str> for AngleArg {
    fn from(s: &str) -> Self {
        AngleArg::Name(s.to_string())
    }
}
impl From<String> for AngleArg {
    fn from(s: String) -> Self {
        AngleArg::Name(s)
    }
}
impl From<f64> for AngleArg {
    fn from(v: f64) -> Self {
        AngleArg::Value(v)
    }
}

impl Circuit {
    pub fn new(n_qubits: u32) -> Self {
        Circuit {
            n_qubits,
            input: InputSpec::Zeros,
            gates: Vec::new(),
            params: Vec::new(),
        }
    }

    pub fn with_input(mut self, input: InputSpec) -> Self {
        self.input = input;
        self
    }

    pub fn separable(mut self) -> Self {
        self.input = InputSpec::Separable;
        self
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn input(&self) -> &InputSpec {
        &self.input
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn n_params(&self) -> usize {
        self.params.len()
    }

    /// Intern a parameter name, returning its index.
    pub fn param(&mut self, name: &str) -> u32 {
        if let Some(k) = self.params.iter().position(|p| p == name) {
            k as u32
        } else {
            self.params.push(name.to_string());
            (self.params.len() - 1) as u32
        }
    }

    fn angle(&mut self, arg: AngleArg) -> Angle {
        match arg {
            AngleArg::Name(name) => Angle::Param(self.param(&name)),
            AngleArg::Value(v) => Angle::Const(v),
        }
    }

    pub fn push(mut self, g: Gate) -> Self {
        self.gates.push(g);
        self
    }

    pub fn h(self, q: u32) -> Self {
        self.push(Gate::H(q))
    }
    pub fn x(self, q: u32) -> Self {
        self.push(Gate::X(q))
    }
    pub fn y(self, q: u32) -> Self {
        self.push(Gate::Y(q))
    }
    pub fn z(self, q: u32) -> Self {
        self.push(Gate::Z(q))
    }
    pub fn s(self, q: u32) -> Self {
        self.push(Gate::S(q))
    }
    pub fn sdg(self, q: u32) -> Self {
        self.push(Gate::Sdg(q))
    }
    pub fn cnot(self, control: u32, target: u32) -> Self {
        self.push(Gate::Cnot { control, target })
    }
    pub fn cz(self, a: u32, b: u32) -> Self {
        self.push(Gate::Cz { a, b })
    }
    pub fn rx(mut self, target: u32, angle: impl Into<AngleArg>) -> Self {
        let angle = self.angle(angle.into());
        self.push(Gate::Rx { target, angle, dag: false })
    }
    pub fn ry(mut self, target: u32, angle: impl Into<AngleArg>) -> Self {
        let angle = self.angle(angle.into());
        self.push(Gate::Ry { target, angle, dag: false })
    }
    pub fn rz(mut self, target: u32, angle: impl Into<AngleArg>) -> Self {
        let angle = self.angle(angle.into());
        self.push(Gate::Rz { target, angle, dag: false })
    }
    pub fn cry(mut self, control: u32, target: u32, angle: impl Into<AngleArg>) -> Self {
        let angle = self.angle(angle.into());
        self.push(Gate::CRy { control, target, angle, dag: false })
    }

    /// Keep only the first `stage` gates (circuit prefix, for per-stage rules).
    pub fn prefix(&self, stage: usize) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            input: self.input.clone(),
            gates: self.gates[..stage.min(self.gates.len())].to_vec(),
            params: self.params.clone(),
        }
    }

    /// Adjoint circuit: gates reversed and daggered. The input spec is kept
    /// (callers compose adjoints onto other circuits).
    pub fn dagger(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            input: self.input.clone(),
            gates: self.gates.iter().rev().map(Gate::dagger).collect(),
            params: self.params.clone(),
        }
    }

    /// Append `other`'s gates, remapping its parameters by name into this
    /// circuit's table.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::KernelQubitMismatch(self.n_qubits, other.n_qubits));
        }
        let mut out = self.clone();
        let remap: Vec<u32> = other
            .params
            .iter()
            .map(|name| out.param(name))
            .collect();
        for g in &other.gates {
            let g = match *g {
                Gate::Rx { target, angle, dag } => Gate::Rx { target, angle: remap_angle(angle, &remap), dag },
                Gate::Ry { target, angle, dag } => Gate::Ry { target, angle: remap_angle(angle, &remap), dag },
                Gate::Rz { target, angle, dag } => Gate::Rz { target, angle: remap_angle(angle, &remap), dag },
                Gate::CRy { control, target, angle, dag } => {
                    Gate::CRy { control, target, angle: remap_angle(angle, &remap), dag }
                }
                g => g,
            };
            out.gates.push(g);
        }
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        for g in &self.gates {
            g.validate(self.n_qubits)?;
            if let Some(k) = g.param_index() {
                if k as usize >= self.params.len() {
                    return Err(Error::UnboundParameter(format!("#{k}")));
                }
            }
        }
        if let InputSpec::Explicit(v) = &self.input {
            let expected = 1usize << self.n_qubits;
            if v.len() != expected {
                return Err(Error::InputDimension { got: v.len(), expected });
            }
        }
        Ok(())
    }

    /// Bit value of `qubit` (1-based, MSB-first) within basis index `idx`.
    pub fn bit(&self, idx: usize, qubit: u32) -> usize {
        (idx >> (self.n_qubits - qubit)) & 1
    }

    /// Bit mask of `qubit` in basis indices.
    pub fn mask(&self, qubit: u32) -> usize {
        1usize << (self.n_qubits - qubit)
    }
}

fn remap_angle(angle: Angle, remap: &[u32]) -> Angle {
    match angle {
        Angle::Param(k) => Angle::Param(remap[k as usize]),
        c => c,
    }
}

// --- JSON form -------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CircuitJson {
    qubits: u32,
    input: InputJson,
    gates: Vec<GateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum InputJson {
    Named(String),
    Vector(Vec<[f64; 2]>),
}

#[derive(Serialize, Deserialize, Default)]
struct GateJson {
    g: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dag: Option<bool>,
}

impl Circuit {
    pub fn to_json_string(&self) -> String {
        let gates = self
            .gates
            .iter()
            .map(|g| self.gate_json(g))
            .collect::<Vec<_>>();
        let j = CircuitJson {
            qubits: self.n_qubits,
            input: match &self.input {
                InputSpec::Zeros => InputJson::Named("zeros".into()),
                InputSpec::Separable => InputJson::Named("separable".into()),
                InputSpec::Explicit(v) => {
                    InputJson::Vector(v.iter().map(|z| [z.re, z.im]).collect())
                }
            },
            gates,
            params: if self.params.is_empty() {
                None
            } else {
                Some(self.params.clone())
            },
        };
        serde_json::to_string_pretty(&j).expect("circuit serialization")
    }

    fn gate_json(&self, g: &Gate) -> GateJson {
        let mut j = GateJson::default();
        let rot = |j: &mut GateJson, name: &str, target: u32, angle: Angle, dag: bool| {
            j.g = name.to_string();
            j.t = Some(target);
            match angle {
                Angle::Param(k) => j.p = Some(self.params[k as usize].clone()),
                Angle::Const(v) => j.v = Some(v),
            }
            if dag {
                j.dag = Some(true);
            }
        };
        match *g {
            Gate::H(q) => {
                j.g = "h".into();
                j.t = Some(q);
            }
            Gate::X(q) => {
                j.g = "x".into();
                j.t = Some(q);
            }
            Gate::Y(q) => {
                j.g = "y".into();
                j.t = Some(q);
            }
            Gate::Z(q) => {
                j.g = "z".into();
                j.t = Some(q);
            }
            Gate::S(q) => {
                j.g = "s".into();
                j.t = Some(q);
            }
            Gate::Sdg(q) => {
                j.g = "sdg".into();
                j.t = Some(q);
            }
            Gate::Cnot { control, target } => {
                j.g = "cnot".into();
                j.c = Some(control);
                j.t = Some(target);
            }
            Gate::Cz { a, b } => {
                j.g = "cz".into();
                j.c = Some(a);
                j.t = Some(b);
            }
            Gate::Rx { target, angle, dag } => rot(&mut j, "rx", target, angle, dag),
            Gate::Ry { target, angle, dag } => rot(&mut j, "ry", target, angle, dag),
            Gate::Rz { target, angle, dag } => rot(&mut j, "rz", target, angle, dag),
            Gate::CRy { control, target, angle, dag } => {
                rot(&mut j, "cry", target, angle, dag);
                j.c = Some(control);
            }
        }
        j
    }

    pub fn from_json_str(s: &str) -> Result<Circuit> {
        let j: CircuitJson = serde_json::from_str(s)?;
        let mut c = Circuit::new(j.qubits);
        c.input = match j.input {
            InputJson::Named(name) => match name.as_str() {
                "zeros" => InputSpec::Zeros,
                "separable" => InputSpec::Separable,
                other => {
                    return Err(Error::ExprJson(format!(
                        "unknown input kind `{other}` (want zeros | separable | amplitude array)"
                    )))
                }
            },
            InputJson::Vector(v) => InputSpec::Explicit(
                v.into_iter().map(|[re, im]| Complex64::new(re, im)).collect(),
            ),
        };
        if let Some(params) = j.params {
            for p in &params {
                c.param(p);
            }
        }
        for gj in j.gates {
            let t = || gj.t.ok_or_else(|| Error::ExprJson(format!("gate `{}` lacks t", gj.g)));
            let ctrl = || gj.c.ok_or_else(|| Error::ExprJson(format!("gate `{}` lacks c", gj.g)));
            let dag = gj.dag.unwrap_or(false);
            let angle = |c: &mut Circuit| -> Result<Angle> {
                if let Some(p) = &gj.p {
                    Ok(Angle::Param(c.param(p)))
                } else if let Some(v) = gj.v {
                    Ok(Angle::Const(v))
                } else {
                    Err(Error::ExprJson(format!("rotation `{}` lacks p or v", gj.g)))
                }
            };
            let gate = match gj.g.as_str() {
                "h" => Gate::H(t()?),
                "x" => Gate::X(t()?),
                "y" => Gate::Y(t()?),
                "z" => Gate::Z(t()?),
                "s" => Gate::S(t()?),
                "sdg" => Gate::Sdg(t()?),
                "cnot" | "cx" => Gate::Cnot { control: ctrl()?, target: t()? },
                "cz" => Gate::Cz { a: ctrl()?, b: t()? },
                "rx" => Gate::Rx { target: t()?, angle: angle(&mut c)?, dag },
                "ry" => Gate::Ry { target: t()?, angle: angle(&mut c)?, dag },
                "rz" => Gate::Rz { target: t()?, angle: angle(&mut c)?, dag },
                "cry" => Gate::CRy { control: ctrl()?, target: t()?, angle: angle(&mut c)?, dag },
                other => return Err(Error::UnknownGate(other.to_string())),
            };
            c.gates.push(gate);
        }
        c.validate()?;
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_and_params() {
        let c = Circuit::new(2).ry(1, "t0").ry(2, "t1").cnot(1, 2).ry(1, "t0");
        assert_eq!(c.n_params(), 2);
        assert_eq!(c.gates().len(), 4);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn json_round_trip() {
        let c = Circuit::new(3)
            .separable()
            .h(1)
            .ry(2, "theta_0")
            .cry(1, 3, "theta_1")
            .cnot(1, 2)
            .cz(2, 3)
            .rz(3, std::f64::consts::FRAC_PI_2);
        let s = c.to_json_string();
        let c2 = Circuit::from_json_str(&s).unwrap();
        assert_eq!(c2.n_qubits(), 3);
        assert_eq!(c2.gates(), c.gates());
        assert_eq!(c2.params(), c.params());
        assert_eq!(c2.to_json_string(), s);
    }

    #[test]
    fn json_example_from_interface() {
        let s = r#"{"qubits":4, "input":"zeros", "gates":[{"g":"ry","t":2,"p":"theta_3"},{"g":"cnot","c":1,"t":2}]}"#;
        let c = Circuit::from_json_str(s).unwrap();
        assert_eq!(c.n_qubits(), 4);
        assert_eq!(c.n_params(), 1);
    }

    #[test]
    fn dagger_reverses_and_flips() {
        let c = Circuit::new(2).s(1).ry(2, "t");
        let d = c.dagger();
        assert_eq!(d.gates()[0], Gate::Ry { target: 2, angle: Angle::Param(0), dag: true });
        assert_eq!(d.gates()[1], Gate::Sdg(1));
    }

    #[test]
    fn msb_convention() {
        let c = Circuit::new(3);
        assert_eq!(c.mask(1), 0b100);
        assert_eq!(c.mask(3), 0b001);
        assert_eq!(c.bit(0b100, 1), 1);
        assert_eq!(c.bit(0b100, 3), 0);
    }

    #[test]
    fn bad_explicit_input_len() {
        let c = Circuit::new(2).with_input(InputSpec::Explicit(vec![Complex64::new(1.0, 0.0); 3]));
        assert!(matches!(c.validate(), Err(Error::InputDimension { .. })));
    }
}
