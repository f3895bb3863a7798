use crate::AlgebraError;

/// The six named metric families. The first diagonal entry is the curvature
/// slot (0 flat, +1 elliptic-like, -1 hyperbolic-like); the last entry is +1
/// for the spatial families and -1 for the relativistic ones; everything in
/// between is +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Euclidean,
    Elliptic,
    Hyperbolic,
    Minkowski,
    DeSitter,
    AntiDeSitter,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::Euclidean,
        Metric::Elliptic,
        Metric::Hyperbolic,
        Metric::Minkowski,
        Metric::DeSitter,
        Metric::AntiDeSitter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Euclidean => "euclidean",
            Metric::Elliptic => "elliptic",
            Metric::Hyperbolic => "hyperbolic",
            Metric::Minkowski => "minkowski",
            Metric::DeSitter => "de_sitter",
            Metric::AntiDeSitter => "anti_de_sitter",
        }
    }

    pub fn from_name(name: &str) -> Option<Metric> {
        match name {
            "euclidean" => Some(Metric::Euclidean),
            "elliptic" => Some(Metric::Elliptic),
            "hyperbolic" => Some(Metric::Hyperbolic),
            "minkowski" => Some(Metric::Minkowski),
            "de_sitter" => Some(Metric::DeSitter),
            "anti_de_sitter" => Some(Metric::AntiDeSitter),
            _ => None,
        }
    }

    fn curvature(self) -> f64 {
        match self {
            Metric::Euclidean | Metric::Minkowski => 0.0,
            Metric::Elliptic | Metric::DeSitter => 1.0,
            Metric::Hyperbolic | Metric::AntiDeSitter => -1.0,
        }
    }

    fn last_entry(self) -> f64 {
        match self {
            Metric::Euclidean | Metric::Elliptic | Metric::Hyperbolic => 1.0,
            Metric::Minkowski | Metric::DeSitter | Metric::AntiDeSitter => -1.0,
        }
    }
}

/// Diagonal metric on the n+1 dual basis vectors e0..en.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Signature {
    n: u8,
    diag: [f64; 5],
}

impl Signature {
    pub fn new(n: u8, metric: Metric) -> Result<Signature, AlgebraError> {
        if !(1..=4).contains(&n) {
            return Err(AlgebraError::InvalidDimension(n));
        }
        let mut diag = [0.0; 5];
        diag[0] = metric.curvature();
        for entry in diag.iter_mut().take(n as usize).skip(1) {
            *entry = 1.0;
        }
        diag[n as usize] = metric.last_entry();
        Ok(Signature { n, diag })
    }

    pub fn euclidean(n: u8) -> Signature {
        Signature::new(n, Metric::Euclidean).expect("dimension in range")
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Metric square of basis vector e_i.
    pub fn diag(&self, i: u8) -> f64 {
        debug_assert!(i <= self.n);
        self.diag[i as usize]
    }

    pub fn diag_slice(&self) -> &[f64] {
        &self.diag[..=self.n as usize]
    }

    /// True when some basis vector squares to zero (always e0 in the flat
    /// families).
    pub fn is_degenerate(&self) -> bool {
        self.diag_slice().iter().any(|&d| d == 0.0)
    }
}
