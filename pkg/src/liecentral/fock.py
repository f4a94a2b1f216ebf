"""Truncated Fock-space matrices for the Hermitian generators Z-hat and W-hat.

Mode j carries ladder matrices a|k> = sqrt(k)|k-1> on occupations 0..N.
Z-hat_j = sqrt(lam) Q_j and Z-hat_{n+j} = sqrt(lam) P_j with
Q = (a + a^dag)/sqrt(2), P = i(a^dag - a)/sqrt(2), so that
[Z-hat_a, Z-hat_b] = i lam zeta_ab away from the truncation edge.
For lam < 0 the roles of Q and P are swapped and |lam| is used, which
realizes the same relation with the sign carried by zeta.

Truncation breaks the relations near occupation N, so identities are checked
on the interior: the projector onto product states with every occupation
<= N - margin.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from .weyl import derive_sp_constants, w_index_pairs, wz_expected, zeta

TOL_DEGREE2 = 1e-12
TOL_WZ = 1e-10
TOL_WW = 1e-9
TOL_RESCALE = 1e-13


@dataclass(frozen=True)
class FockConfig:
    modes: int
    levels: int
    lam: float = 1.0

    def __post_init__(self):
        if self.modes < 1:
            raise ValueError("modes must be >= 1")
        if self.levels < 2:
            raise ValueError("levels (truncation N) must be >= 2")
        if self.lam == 0:
            raise ValueError("lambda must be nonzero")

    @property
    def dim(self) -> int:
        return (self.levels + 1) ** self.modes

    @property
    def swapped(self) -> bool:
        return self.lam < 0


@dataclass(frozen=True, eq=False)
class TruncatedOperator:
    matrix: np.ndarray
    degree: int

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T), initial=0.0))

    def __matmul__(self, other: "TruncatedOperator") -> "TruncatedOperator":
        return TruncatedOperator(self.matrix @ other.matrix, self.degree + other.degree)


def annihilation(levels: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, levels + 1, dtype=float)), 1).astype(complex)


def embed(single: np.ndarray, mode: int, modes: int) -> np.ndarray:
    """Identity-padded tensor product; mode 0 is the slowest-varying factor."""
    eye = np.eye(single.shape[0], dtype=complex)
    factors = [single if j == mode else eye for j in range(modes)]
    return reduce(np.kron, factors)


def build_z(config: FockConfig) -> List[TruncatedOperator]:
    a = annihilation(config.levels)
    ad = a.conj().T
    q = (a + ad) / np.sqrt(2)
    p = 1j * (ad - a) / np.sqrt(2)
    if config.swapped:
        q, p = p, q
    s = np.sqrt(abs(config.lam))
    n = config.modes
    first = [TruncatedOperator(s * embed(q, j, n), 1) for j in range(n)]
    second = [TruncatedOperator(s * embed(p, j, n), 1) for j in range(n)]
    return first + second


def w_matrix(z: Sequence[TruncatedOperator], a: int, b: int) -> TruncatedOperator:
    """Symmetrized product (Z_a Z_b + Z_b Z_a) / 2."""
    za, zb = z[a].matrix, z[b].matrix
    return TruncatedOperator((za @ zb + zb @ za) / 2, 2)


def build_w(config: FockConfig, z: Sequence[TruncatedOperator]) -> Dict[Tuple[int, int], TruncatedOperator]:
    if len(z) != 2 * config.modes:
        raise ValueError(f"expected {2 * config.modes} Z operators, got {len(z)}")
    return {(a, b): w_matrix(z, a, b) for a, b in w_index_pairs(config.modes)}


def commutator(x, y) -> np.ndarray:
    x = getattr(x, "matrix", x)
    y = getattr(y, "matrix", y)
    return x @ y - y @ x


def interior_indices(config: FockConfig, margin: int) -> np.ndarray:
    if margin < 0:
        raise ValueError("margin must be >= 0")
    if margin >= config.levels:
        raise ValueError(f"margin {margin} leaves an empty interior for N={config.levels}")
    top = config.levels - margin
    occ = itertools.product(range(config.levels + 1), repeat=config.modes)
    return np.array([i for i, o in enumerate(occ) if max(o) <= top])


def residual(config: FockConfig, lhs, rhs, margin: int) -> float:
    """Max-norm of P (lhs - rhs) P for the interior projector P."""
    lhs = getattr(lhs, "matrix", lhs)
    rhs = getattr(rhs, "matrix", rhs)
    idx = interior_indices(config, margin)
    diff = (lhs - rhs)[np.ix_(idx, idx)]
    return float(np.max(np.abs(diff), initial=0.0))


def _top_index(config: FockConfig) -> int:
    # |N, 0, ..., 0>: mode 0 slowest-varying
    return config.levels * (config.levels + 1) ** (config.modes - 1)


def heisenberg_check(config: FockConfig, margin: int = 2, z=None) -> dict:
    z = z or build_z(config)
    n, dim = config.modes, config.dim
    eye = np.eye(dim, dtype=complex)
    worst = 0.0
    for a, b in itertools.combinations(range(2 * n), 2):
        worst = max(worst, residual(config, commutator(z[a], z[b]), 1j * config.lam * zeta(n, a, b) * eye, margin))
    # the truncated ladder gives [a, a^dag] = 1 - (N+1)|N><N| on mode 0
    corner = complex(commutator(z[0], z[n])[_top_index(config), _top_index(config)])
    expected_corner = -1j * config.lam * config.levels
    return {
        "margin": margin,
        "residual": worst,
        "tolerance": TOL_DEGREE2,
        "corner": [corner.real, corner.imag],
        "corner_expected": [expected_corner.real, expected_corner.imag],
        "corner_error": abs(corner - expected_corner),
        "ok": worst <= TOL_DEGREE2 and abs(corner - expected_corner) <= 1e-10,
    }


def wz_check(config: FockConfig, margin: int = 3, z=None, w=None) -> dict:
    z = z or build_z(config)
    w = w or build_w(config, z)
    n = config.modes
    worst = 0.0
    for (a, b), W in w.items():
        for k in range(2 * n):
            rhs = sum((v * z[c].matrix for c, v in wz_expected(n, a, b, k).items()),
                      np.zeros((config.dim, config.dim), dtype=complex))
            worst = max(worst, residual(config, commutator(W, z[k]), 1j * config.lam * rhs, margin))
    return {"margin": margin, "residual": worst, "tolerance": TOL_WZ, "ok": worst <= TOL_WZ}


def ww_check(config: FockConfig, margin: int = 4, z=None, w=None) -> dict:
    """[W, W] against the structure constants derived symbolically."""
    z = z or build_z(config)
    w = w or build_w(config, z)
    pairs, brackets = derive_sp_constants(config.modes)
    mats = [w[p].matrix for p in pairs]
    worst = 0.0
    for i, j in itertools.combinations(range(len(pairs)), 2):
        rhs = sum((float(v) * mats[k] for k, v in brackets.get((i, j), {}).items()),
                  np.zeros((config.dim, config.dim), dtype=complex))
        worst = max(worst, residual(config, commutator(mats[i], mats[j]), 1j * config.lam * rhs, margin))
    return {"margin": margin, "residual": worst, "tolerance": TOL_WW, "ok": worst <= TOL_WW}


def hermiticity_check(config: FockConfig, z=None, w=None) -> dict:
    z = z or build_z(config)
    w = w or build_w(config, z)
    zdef = max(op.hermiticity_defect() for op in z)
    wdef = max(op.hermiticity_defect() for op in w.values())
    return {"z_defect": zdef, "w_defect": wdef, "tolerance": TOL_DEGREE2,
            "ok": zdef <= TOL_DEGREE2 and wdef <= TOL_DEGREE2}


def rescale_check(config: FockConfig, margin: int = 2) -> dict:
    """Z-hat(lam) / sqrt(lam) against Z-hat(1), plus the lam-scaled Heisenberg relation."""
    heis = heisenberg_check(config, margin)
    report = {"lambda": config.lam, "heisenberg": heis}
    if config.lam > 0:
        unit = build_z(FockConfig(config.modes, config.levels, 1.0))
        scaled = build_z(config)
        s = np.sqrt(config.lam)
        err = max(float(np.max(np.abs(zs.matrix / s - zu.matrix))) for zs, zu in zip(scaled, unit))
        report.update(rescale_error=err, tolerance=TOL_RESCALE, ok=err <= TOL_RESCALE and heis["ok"])
    else:
        report.update(
            rescale_error=None,
            tolerance=TOL_RESCALE,
            note="lambda < 0: Q/P roles swapped; only the commutator scaling is checked",
            ok=heis["ok"],
        )
    return report


CHECKS = ("heisenberg", "wz", "ww", "rescale")


def run_checks(config: FockConfig, checks: Sequence[str] = CHECKS,
               margins: Mapping[str, int] | None = None) -> Dict[str, dict]:
    margins = dict(margins or {})
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}; choose from {CHECKS}")
    z = build_z(config)
    w = build_w(config, z)
    out: Dict[str, dict] = {"hermiticity": hermiticity_check(config, z, w)}
    for name in checks:
        if name == "heisenberg":
            out[name] = heisenberg_check(config, margins.get(name, 2), z)
        elif name == "wz":
            out[name] = wz_check(config, margins.get(name, 3), z, w)
        elif name == "ww":
            out[name] = ww_check(config, margins.get(name, 4), z, w)
        elif name == "rescale":
            out[name] = rescale_check(config, margins.get(name, 2))
    return out


def parse_lambda(text: str) -> float:
    """Accepts '2', '-1/3', '0.5'."""
    return float(Fraction(text))
