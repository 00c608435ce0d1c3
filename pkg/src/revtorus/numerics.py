"""Small 2x2 linear-algebra kernels and finite-difference utilities."""
from __future__ import annotations

import numpy as np

J = np.array([[0.0, -1.0], [1.0, 0.0]])  # 90-degree rotation, J @ J = -I
I2 = np.eye(2)


def rot(theta) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def det2(m) -> float:
    m = np.asarray(m)
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def spectral_norm(m) -> float:
    """Largest singular value (operator 2-norm), batched over leading axes."""
    return np.linalg.svd(np.asarray(m, dtype=float), compute_uv=False)[..., 0]


def cond2(m) -> float:
    s = np.linalg.svd(np.asarray(m, dtype=float), compute_uv=False)
    return s[..., 0] / s[..., -1]


def inv2(m) -> np.ndarray:
    """Inverse via the adjugate; cheap and exact up to rounding for 2x2."""
    m = np.asarray(m, dtype=float)
    d = det2(m)
    out = np.empty_like(m)
    out[..., 0, 0] = m[..., 1, 1]
    out[..., 0, 1] = -m[..., 0, 1]
    out[..., 1, 0] = -m[..., 1, 0]
    out[..., 1, 1] = m[..., 0, 0]
    return out / d[..., None, None]


def expm_tracefree2(x) -> np.ndarray:
    """exp of a trace-free 2x2 matrix in closed form (unit determinant result)."""
    x = np.asarray(x, dtype=float)
    d = det2(x)
    if d > 0:  # elliptic generator: eigenvalues +-i*sqrt(d)
        w = np.sqrt(d)
        return np.cos(w) * I2 + (np.sinc(w / np.pi)) * x
    if d < 0:  # hyperbolic generator
        mu = np.sqrt(-d)
        return np.cosh(mu) * I2 + (np.sinh(mu) / mu) * x
    return I2 + x


def sqrtm_spd2(a) -> np.ndarray:
    """Square root of a symmetric positive-definite 2x2 matrix."""
    a = np.asarray(a, dtype=float)
    s = np.sqrt(det2(a))
    t = np.sqrt(a[0, 0] + a[1, 1] + 2.0 * s)
    return (a + s * I2) / t


def polar2(m) -> tuple[np.ndarray, np.ndarray]:
    """Polar decomposition m = Q @ P with Q a rotation, P symmetric positive."""
    m = np.asarray(m, dtype=float)
    p = sqrtm_spd2(m.T @ m)
    q = m @ inv2(p)
    return q, p


def logm_spd2_unit(p) -> np.ndarray:
    """log of a symmetric positive-definite 2x2 matrix with det 1 (trace-free result)."""
    p = np.asarray(p, dtype=float)
    t = p[0, 0] + p[1, 1]
    if t <= 2.0 + 1e-15:
        return p - I2 if t >= 2.0 else _logm_spd2_small(p)
    lam = 0.5 * (t + np.sqrt(t * t - 4.0))
    return (np.log(lam) / (lam - 1.0 / lam)) * (p - inv2(p))


def _logm_spd2_small(p):
    # trace marginally below 2 can only be rounding noise for det-1 SPD input
    return p - I2


def symmetric_generator_for(x) -> np.ndarray:
    """Solve J @ S = X for symmetric S, given any trace-free X."""
    x = np.asarray(x, dtype=float)
    if abs(x[0, 0] + x[1, 1]) > 1e-12 * (1.0 + spectral_norm(x)):
        raise ValueError("generator matrix must be trace-free")
    # J@S = [[-S10, -S11], [S00, S01]]
    return np.array([[x[1, 0], -x[0, 0]], [-x[0, 0], -x[0, 1]]])


def sl2_two_exponential_factors(l) -> list[np.ndarray]:
    """Factor a unit-determinant matrix as exp(J S1) @ exp(J S2), S_i symmetric.

    The rotation part of the polar decomposition is exp(theta*J) = exp(J @ (theta*I));
    the stretch part is exp(Sigma) with Sigma symmetric trace-free, realized with
    S2 = -J @ Sigma. Factors that are the identity are dropped.
    """
    l = np.asarray(l, dtype=float)
    if abs(det2(l) - 1.0) > 1e-9:
        raise ValueError("factorization requires unit determinant")
    q, p = polar2(l)
    theta = float(np.arctan2(q[1, 0], q[0, 0]))
    sigma = logm_spd2_unit(p)
    factors = []
    if abs(theta) > 0.0:
        factors.append(theta * I2.copy())
    s2 = symmetric_generator_for(sigma)
    if spectral_norm(s2) > 0.0:
        factors.append(s2)
    return factors


def fd_jacobian(func, p, h: float = 1e-6, richardson: bool = False) -> np.ndarray:
    """Central-difference Jacobian of a planar map, optionally Richardson-refined.

    Differences are taken on torus-wrapped displacements so the estimate is
    meaningful near the fundamental-domain seam.
    """
    from .torus import planar_shift, torus_diff

    p = np.asarray(p, dtype=float)

    def jac_at(step):
        cols = []
        for axis in range(2):
            e = np.zeros(2)
            e[axis] = step
            fp = func(planar_shift(p, e))
            fm = func(planar_shift(p, -e))
            cols.append(torus_diff(fp, fm) / (2.0 * step))
        return np.column_stack(cols)

    j1 = jac_at(h)
    if not richardson:
        return j1
    j2 = jac_at(h / 2.0)
    return (4.0 * j2 - j1) / 3.0
