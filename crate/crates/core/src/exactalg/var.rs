use std::fmt;

/// Number of variables in the fixed universe.
pub const NVARS: usize = 8;

/// The ordered variable universe shared by every polynomial.
///
/// The declaration order is the lexicographic tie-break order used for
/// serialization: `lambda < t < s < n < d < l < rho < x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Lambda,
    T,
    S,
    N,
    D,
    L,
    Rho,
    X,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Lambda,
        Var::T,
        Var::S,
        Var::N,
        Var::D,
        Var::L,
        Var::Rho,
        Var::X,
    ];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Lambda => "lambda",
            Var::T => "t",
            Var::S => "s",
            Var::N => "n",
            Var::D => "d",
            Var::L => "l",
            Var::Rho => "rho",
            Var::X => "x",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
