//! Standard quandles and biquandles built from groups. Every output is
//! validated before it is returned.

use crate::biquandle::FiniteBiquandle;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::quandle::FiniteQuandle;
use crate::table::OperationTable;

/// `x*y = x`.
pub fn trivial_quandle(n: usize) -> FiniteQuandle {
    FiniteQuandle::new(OperationTable::from_fn(n, |a, _| a)).expect("trivial quandle")
}

/// `Core(G)`: `g*h = h g⁻¹ h`.
pub fn core_quandle(g: &FiniteGroup) -> Result<FiniteQuandle> {
    let t = OperationTable::from_fn(g.order(), |a, b| g.mul(g.mul(b, g.inv(a)), b));
    FiniteQuandle::new_checked(t, "core quandle")
}

fn check_auto(g: &FiniteGroup, phi: &[usize]) -> Result<()> {
    if g.is_automorphism(phi) {
        Ok(())
    } else {
        Err(Error::NotAnAutomorphism)
    }
}

/// `Aff(G, φ)`: `g*h = φ(g) + h − φ(h)` on an abelian group.
pub fn affine_quandle(g: &FiniteGroup, phi: &[usize]) -> Result<FiniteQuandle> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    check_auto(g, phi)?;
    let t = OperationTable::from_fn(g.order(), |a, b| g.mul(phi[a], g.mul(b, g.inv(phi[b]))));
    FiniteQuandle::new_checked(t, "affine quandle")
}

/// `g⊻h = h⁻¹ g⁻¹ h`, `g⊼h = h⁻² g`.
pub fn wada_biquandle(g: &FiniteGroup) -> Result<FiniteBiquandle> {
    let n = g.order();
    let under = OperationTable::from_fn(n, |a, b| g.mul(g.mul(g.inv(b), g.inv(a)), b));
    let over = OperationTable::from_fn(n, |a, b| {
        let bi = g.inv(b);
        g.mul(g.mul(bi, bi), a)
    });
    FiniteBiquandle::new_checked(under, over, "Wada biquandle")
}

/// `g⊻h = ψφ(g) + (ψ − ψφ)(h)`, `g⊼h = ψ(g)` on an abelian group.
pub fn affine_biquandle(g: &FiniteGroup, phi: &[usize], psi: &[usize]) -> Result<FiniteBiquandle> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    check_auto(g, phi)?;
    check_auto(g, psi)?;
    let n = g.order();
    let under = OperationTable::from_fn(n, |a, b| {
        g.mul(psi[phi[a]], g.mul(psi[b], g.inv(psi[phi[b]])))
    });
    let over = OperationTable::from_fn(n, |a, _| psi[a]);
    FiniteBiquandle::new_checked(under, over, "affine biquandle")
}

/// `Q × K` with `(x,y)⊻(z,w) = (x*z, y)` and `(x,y)⊼(z,w) = (x, y∘⁻¹w)`.
///
/// The pair `(x, y)` is element `x·|K| + y`.
pub fn product_biquandle(q: &FiniteQuandle, k: &FiniteQuandle) -> Result<FiniteBiquandle> {
    let m = k.order();
    let n = q.order() * m;
    let under = OperationTable::from_fn(n, |a, b| q.op(a / m, b / m) * m + a % m);
    let over = OperationTable::from_fn(n, |a, b| (a / m) * m + k.op_inv(a % m, b % m));
    FiniteBiquandle::new_checked(under, over, "product biquandle")
}
