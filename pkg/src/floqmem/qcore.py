"""Two-level-system primitives: Pauli algebra, density matrices, Bloch
vectors and the trace distance.

All quantities are dimensionless with hbar = 1 and the level splitting
omega0 = 1 setting the units (frequencies in omega0, times in 1/omega0).
States are plain 2x2 complex numpy arrays; the functions here validate and
manipulate them.  Eigenproblems of 2x2 Hermitian matrices are solved in
closed form.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SIGMA_PLUS",
    "SIGMA_MINUS",
    "IDENTITY",
    "KET_E",
    "KET_G",
    "validate_density_matrix",
    "bloch_vector",
    "density_from_bloch",
    "eigvalsh_2x2",
    "eigh_2x2",
    "trace_distance",
    "trace_distance_batch",
    "random_orthogonal_pair",
    "floquet_basis_elements",
]

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
SIGMA_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
SIGMA_MINUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

# |e> and |g>, the sigma_z eigenstates with eigenvalues +1 / -1
KET_E = np.array([1.0, 0.0], dtype=complex)
KET_G = np.array([0.0, 1.0], dtype=complex)

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-10


def validate_density_matrix(rho, herm_tol=HERMITICITY_TOL, trace_tol=TRACE_TOL,
                            pos_tol=POSITIVITY_TOL):
    """Check the density-matrix invariants of a 2x2 array.

    Raises ValueError if ``rho`` is not Hermitian (max-norm ``herm_tol``),
    unit trace (``trace_tol``) or positive semidefinite (minimum eigenvalue
    above ``-pos_tol``).  Returns ``rho`` unchanged on success.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {rho.shape}")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > herm_tol:
        raise ValueError(f"matrix is not Hermitian: max |rho - rho^dag| = {herm:.3e}")
    tr = rho[0, 0].real + rho[1, 1].real
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"matrix does not have unit trace: Tr rho = {tr!r}")
    lo, _ = eigvalsh_2x2(rho)
    if lo < -pos_tol:
        raise ValueError(f"matrix is not positive semidefinite: min eig = {lo:.3e}")
    return rho


def bloch_vector(rho):
    """Bloch vector (x, y, z) of a 2x2 density matrix, r_a = Tr(rho sigma_a)."""
    rho = np.asarray(rho, dtype=complex)
    x = 2.0 * rho[0, 1].real
    y = -2.0 * rho[0, 1].imag
    z = (rho[0, 0] - rho[1, 1]).real
    return np.array([x, y, z])


def density_from_bloch(r):
    """Density matrix rho = (1 + r . sigma) / 2 for a Bloch vector with |r| <= 1."""
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise ValueError("Bloch vector must have three components")
    n = np.linalg.norm(r)
    if n > 1.0 + 1e-12:
        raise ValueError(f"Bloch vector has norm {n} > 1")
    x, y, z = r
    return 0.5 * np.array([[1.0 + z, x - 1.0j * y],
                           [x + 1.0j * y, 1.0 - z]], dtype=complex)


def eigvalsh_2x2(h):
    """Eigenvalues (ascending) of a 2x2 Hermitian matrix, in closed form."""
    a = h[0, 0].real
    d = h[1, 1].real
    b = h[0, 1]
    s = 0.5 * (a + d)
    r = np.hypot(0.5 * (a - d), abs(b))
    return s - r, s + r


def eigh_2x2(h):
    """Closed-form eigendecomposition of a 2x2 Hermitian matrix.

    Returns ``(w, V)`` with eigenvalues ``w`` ascending and orthonormal
    eigenvector columns ``V[:, k]``.  The eigenvector phase is fixed by
    making its largest-magnitude component real and positive.
    """
    h = np.asarray(h, dtype=complex)
    a = h[0, 0].real
    d = h[1, 1].real
    b = h[0, 1]
    s = 0.5 * (a + d)
    half_diff = 0.5 * (a - d)
    r = np.hypot(half_diff, abs(b))
    w = np.array([s - r, s + r])
    if r < 1e-300:
        return w, np.eye(2, dtype=complex)
    # eigenvector for the + eigenvalue; choose the better-conditioned formula
    if half_diff >= 0:
        v_plus = np.array([half_diff + r, np.conj(b)], dtype=complex)
    else:
        v_plus = np.array([b, r - half_diff], dtype=complex)
    nrm = np.linalg.norm(v_plus)
    if nrm < 1e-300:
        return w, np.eye(2, dtype=complex)
    v_plus /= nrm
    v_minus = np.array([-np.conj(v_plus[1]), np.conj(v_plus[0])])
    V = np.column_stack([v_minus, v_plus])
    for k in (0, 1):
        j = np.argmax(np.abs(V[:, k]))
        ph = V[j, k]
        if abs(ph) > 0:
            V[:, k] *= np.conj(ph) / abs(ph)
    return w, V


def trace_distance(a, b):
    """Trace distance D(a, b) = (1/2) Tr |a - b| between two density matrices.

    Both inputs must satisfy the density-matrix invariants; for qubits the
    result equals half the Euclidean distance of the Bloch vectors.
    """
    a = validate_density_matrix(a)
    b = validate_density_matrix(b)
    lo, hi = eigvalsh_2x2(a - b)
    return 0.5 * (abs(lo) + abs(hi))


def trace_distance_batch(d00, d01, d11):
    """Trace distance from the elements of a batch of Hermitian differences.

    ``d00``, ``d11`` are the (complex) diagonal elements and ``d01`` the
    upper off-diagonal element of ``a - b``; arrays broadcast.  No invariant
    checks: this is the fast path for trace-distance curves.
    """
    s = 0.5 * (d00 + d11).real
    r = np.hypot(0.5 * (d00 - d11).real, np.abs(d01))
    return 0.5 * (np.abs(s - r) + np.abs(s + r))


def random_orthogonal_pair(rng):
    """Draw an antipodal pure-state pair rho_pm = (1 +- n.sigma)/2.

    The axis ``n`` is uniform on the unit sphere; the two states are
    orthogonal, so their trace distance is exactly 1.  ``rng`` is a
    ``numpy.random.Generator``; fixed generator state gives a reproducible
    pair.  Returns ``(rho_plus, rho_minus, n)``.
    """
    v = rng.normal(size=3)
    n = np.linalg.norm(v)
    while n < 1e-12:  # astronomically unlikely; redraw for safety
        v = rng.normal(size=3)
        n = np.linalg.norm(v)
    axis = v / n
    return density_from_bloch(axis), density_from_bloch(-axis), axis


def floquet_basis_elements(rho, basis, ortho_tol=1e-10):
    """Matrix elements <u_i| rho |u_j> of a state in an orthonormal 2-basis.

    ``basis`` holds the two basis kets as columns (or a sequence of two
    2-vectors).  Raises ValueError when the basis is not orthonormal to
    ``ortho_tol``.  The transform preserves trace and hermiticity.
    """
    rho = np.asarray(rho, dtype=complex)
    if isinstance(basis, (list, tuple)):
        U = np.column_stack([np.asarray(u, dtype=complex).ravel() for u in basis])
    else:
        U = np.asarray(basis, dtype=complex)
    gram = U.conj().T @ U
    if np.max(np.abs(gram - np.eye(2))) > ortho_tol:
        raise ValueError("basis is not orthonormal")
    return U.conj().T @ rho @ U
