use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::repdims::{GroupFamily, GroupKind};

pub const UNITARY_TOL: f64 = 1e-10;
pub const DET_TOL: f64 = 1e-8;
pub const SYMPLECTIC_TOL: f64 = 1e-8;

const MAX_ATTEMPTS: usize = 8;
// relative to the typical column norm sqrt(size)
const DEGENERATE_PIVOT: f64 = 1e-10;

/// A matrix in one of the compact classical groups, stored as complex even
/// when real.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    family: GroupFamily,
    matrix: DMatrix<Complex64>,
}

/// Worst entrywise deviations from the defining relations.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct MembershipResiduals {
    /// `‖U*U − I‖_max`
    pub unitarity: f64,
    /// Largest imaginary part (orthogonal groups only).
    pub imaginary: f64,
    /// `|det U − 1|` (orthogonal groups only).
    pub determinant: f64,
    /// `‖UᵀJU − J‖_max` (symplectic only).
    pub symplectic: f64,
}

/// `J = [[0, I], [−I, 0]]` of size `2n`.
pub fn symplectic_form(n: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        if j == i + n {
            Complex64::new(1.0, 0.0)
        } else if i == j + n {
            Complex64::new(-1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

impl GroupElement {
    pub fn identity(family: GroupFamily) -> Self {
        let size = family.matrix_size();
        GroupElement { family, matrix: DMatrix::identity(size, size) }
    }

    /// Wraps a matrix after checking it lies in the group.
    pub fn from_matrix(family: GroupFamily, matrix: DMatrix<Complex64>) -> Result<Self> {
        let size = family.matrix_size();
        if matrix.nrows() != size || matrix.ncols() != size {
            return Err(Error::domain(format!(
                "{family} needs a {size}x{size} matrix, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let element = GroupElement { family, matrix };
        element.validate()?;
        Ok(element)
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// The inverse, as the conjugate transpose.
    pub fn inverse(&self) -> DMatrix<Complex64> {
        self.matrix.adjoint()
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    pub fn residuals(&self) -> MembershipResiduals {
        let m = &self.matrix;
        let size = m.nrows();
        let mut out = MembershipResiduals {
            unitarity: max_abs(&(m.adjoint() * m - DMatrix::<Complex64>::identity(size, size))),
            ..Default::default()
        };
        match self.family.kind {
            GroupKind::SpecialOrthogonalEven | GroupKind::SpecialOrthogonalOdd => {
                out.imaginary = m.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
                let real = m.map(|z| z.re);
                out.determinant = (real.determinant() - 1.0).abs();
            }
            GroupKind::Symplectic => {
                let j = symplectic_form(self.family.n);
                out.symplectic = max_abs(&(m.transpose() * &j * m - j));
            }
            GroupKind::Unitary => {}
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let res = self.residuals();
        let fail = |what: &str, v: f64| {
            Err(Error::domain(format!("{} element fails {what}: residual {v:e}", self.family)))
        };
        if res.unitarity > UNITARY_TOL {
            return fail("unitarity", res.unitarity);
        }
        if res.imaginary > UNITARY_TOL {
            return fail("reality", res.imaginary);
        }
        if res.determinant > DET_TOL {
            return fail("det = 1", res.determinant);
        }
        if res.symplectic > SYMPLECTIC_TOL {
            return fail("UᵀJU = J", res.symplectic);
        }
        Ok(())
    }
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Ginibre matrix → QR → multiply each column of Q by the phase of the
/// matching diagonal entry of R, which makes R's diagonal positive and the
/// law of Q exactly Haar on `U(n)`.
fn sample_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Option<DMatrix<Complex64>> {
    let z = DMatrix::from_fn(n, n, |_, _| complex_gaussian(rng));
    let qr = z.qr();
    let r = qr.r();
    let mut q = qr.q();
    let floor = DEGENERATE_PIVOT * (n as f64).sqrt();
    for j in 0..n {
        let d = r[(j, j)];
        let norm = d.norm();
        if norm < floor {
            return None;
        }
        let phase = d / norm;
        for v in q.column_mut(j).iter_mut() {
            *v *= phase;
        }
    }
    Some(q)
}

/// Real Gaussian → QR → sign correction gives Haar on `O(N)`; flipping the
/// first column on the `det = −1` coset maps it onto Haar on `SO(N)`.
fn sample_special_orthogonal<R: Rng + ?Sized>(size: usize, rng: &mut R) -> Option<DMatrix<Complex64>> {
    let g = DMatrix::<f64>::from_fn(size, size, |_, _| rng.sample(StandardNormal));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    let floor = DEGENERATE_PIVOT * (size as f64).sqrt();
    for j in 0..size {
        let d = r[(j, j)];
        if d.abs() < floor {
            return None;
        }
        if d < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    Some(q.map(|x| Complex64::new(x, 0.0)))
}

/// Gram–Schmidt over the quaternions, carried out in the `2n × 2n` complex
/// picture where a quaternion `a + bi + cj + dk` is the block
/// `[[a+bi, c+di], [−c+di, a−bi]]`. A quaternionic column is the pair
/// `(x; y)`, `(−ȳ; x̄)`; orthonormalising the first member against all earlier
/// pairs and then forming its partner keeps the structure, and the implied
/// quaternionic R factor has a positive real diagonal, so the law of the
/// result is Haar on `Sp(n)`.
fn sample_symplectic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Option<DMatrix<Complex64>> {
    let size = 2 * n;
    let a = DMatrix::from_fn(n, n, |_, _| complex_gaussian(rng));
    let b = DMatrix::from_fn(n, n, |_, _| complex_gaussian(rng));
    let mut q = DMatrix::<Complex64>::zeros(size, size);
    let floor = DEGENERATE_PIVOT * (size as f64).sqrt();

    for j in 0..n {
        let mut v = nalgebra::DVector::<Complex64>::zeros(size);
        for i in 0..n {
            v[i] = a[(i, j)];
            v[n + i] = -b[(i, j)].conj();
        }
        // two passes of modified Gram–Schmidt against the 2j finished columns
        for _ in 0..2 {
            for col in (0..j).chain(n..n + j) {
                let u = q.column(col);
                let proj = u.dotc(&v);
                v.axpy(-proj, &u, Complex64::new(1.0, 0.0));
            }
        }
        let norm = v.norm();
        if norm < floor {
            return None;
        }
        v.unscale_mut(norm);
        for i in 0..n {
            q[(i, j)] = v[i];
            q[(n + i, j)] = v[n + i];
            q[(i, n + j)] = -v[n + i].conj();
            q[(n + i, n + j)] = v[i].conj();
        }
    }
    Some(q)
}

/// Draws one Haar-distributed element of `family`.
pub fn sample<R: Rng + ?Sized>(family: GroupFamily, rng: &mut R) -> Result<GroupElement> {
    for _ in 0..MAX_ATTEMPTS {
        let m = match family.kind {
            GroupKind::Unitary => sample_unitary(family.n, rng),
            GroupKind::SpecialOrthogonalEven | GroupKind::SpecialOrthogonalOdd => {
                sample_special_orthogonal(family.matrix_size(), rng)
            }
            GroupKind::Symplectic => sample_symplectic(family.n, rng),
        };
        if let Some(matrix) = m {
            return Ok(GroupElement { family, matrix });
        }
    }
    Err(Error::Sampling(format!(
        "{family}: Gaussian matrix was numerically singular {MAX_ATTEMPTS} times"
    )))
}

/// `Tr(∏ x_i⁻¹ y_i⁻¹ x_i y_i)`.
pub fn commutator_product_trace(xs: &[GroupElement], ys: &[GroupElement]) -> Result<Complex64> {
    if xs.is_empty() || xs.len() != ys.len() {
        return Err(Error::domain(format!(
            "need equally many x and y (at least one), got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let family = xs[0].family;
    if xs.iter().chain(ys).any(|g| g.family != family) {
        return Err(Error::domain("all elements must come from the same group"));
    }
    let size = family.matrix_size();
    let mut product = DMatrix::<Complex64>::identity(size, size);
    for (x, y) in xs.iter().zip(ys) {
        let comm = x.inverse() * y.inverse() * &x.matrix * &y.matrix;
        product *= comm;
    }
    Ok(product.trace())
}
