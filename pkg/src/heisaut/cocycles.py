"""1-cocycles GL(2,Z) -> Z + Z and the sections they classify.

For the natural action of GL(2,Z) on Z + Z, a 1-cocycle is a map phi
with phi(gh) = phi(g) + g.phi(h).  Such a map is determined by its
values on the generators rho, tau, kappa, and a value triple defines a
cocycle exactly when extending it along each defining relator of
GL(2,Z) gives (0,0); Cocycle validates that at construction.

The punchline this module makes computable: the cocycle lattice has
rank 2 and every cocycle is a coboundary phi(g) = g.a - a, so the
homomorphic sections of the projection Aut(G) -> GL(2,Z) form a single
orbit under twisting by Z + Z.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import gl2
from .aut import (
    IDENTITY_AUT,
    ZERO_VECTOR,
    Automorphism,
    InnerVector,
    act,
    compose,
    inner,
    invert,
    parse_automorphism,
)
from .aut import power as aut_power
from .gl2 import GeneratorWord, Gl2Matrix, Letter, LetterPair
from .zlattice import Vector, in_lattice, kernel_basis, lattices_equal


class RelatorViolation(ValueError):
    """A generator assignment breaks a defining relator of GL(2,Z)."""

    def __init__(self, relator: str, detail: str):
        self.relator = relator
        super().__init__(f"relator '{relator}' violated: {detail}")


class InconsistencyError(ValueError):
    """No group element solves the requested equations."""


_GEN_MATRIX = {Letter.RHO: gl2.A, Letter.TAU: gl2.B, Letter.KAPPA: gl2.D}


def _phi_power(
    mat: Gl2Matrix, val: InnerVector, exp: int
) -> tuple[InnerVector, Gl2Matrix]:
    """(phi(l^exp), L^exp) given phi(l) = val, by the cocycle identity.

    phi(l^{2k}) = phi(l^k) + L^k.phi(l^k) and phi(l^-k) = -L^-k.phi(l^k),
    so exponents of any size cost O(log exp) exact operations.
    """
    if exp < 0:
        v, p = _phi_power(mat, val, -exp)
        pinv = gl2.mat_inverse(p)
        return -act(pinv, v), pinv
    if exp == 0:
        return ZERO_VECTOR, gl2.IDENTITY
    half, phalf = _phi_power(mat, val, exp // 2)
    v = half + act(phalf, half)
    p = phalf * phalf
    if exp & 1:
        v = v + act(p, val)
        p = p * mat
    return v, p


def _extend_values(
    v_rho: InnerVector,
    v_tau: InnerVector,
    v_kappa: InnerVector,
    pairs: tuple[LetterPair, ...],
) -> InnerVector:
    # phi(g l^e) = phi(g) + g.phi(l^e), folded left to right over raw
    # letters (no normalization, so relator checks stay meaningful)
    values = {Letter.RHO: v_rho, Letter.TAU: v_tau, Letter.KAPPA: v_kappa}
    total = ZERO_VECTOR
    prefix = gl2.IDENTITY
    for sym, exp in pairs:
        contrib, mat_power = _phi_power(_GEN_MATRIX[sym], values[sym], exp)
        total = total + act(prefix, contrib)
        prefix = prefix * mat_power
    return total


@dataclass(frozen=True, slots=True)
class Cocycle:
    """Generator values of a 1-cocycle; relator-checked at construction."""

    v_rho: InnerVector
    v_tau: InnerVector
    v_kappa: InnerVector

    def __post_init__(self) -> None:
        for name, pairs in gl2.RELATORS:
            value = _extend_values(self.v_rho, self.v_tau, self.v_kappa, pairs)
            if value != ZERO_VECTOR:
                raise RelatorViolation(name, f"extension gives {value}, not (0,0)")

    def value(self, sym: Letter) -> InnerVector:
        if sym is Letter.RHO:
            return self.v_rho
        if sym is Letter.TAU:
            return self.v_tau
        return self.v_kappa

    def __add__(self, other: "Cocycle") -> "Cocycle":
        return Cocycle(
            self.v_rho + other.v_rho,
            self.v_tau + other.v_tau,
            self.v_kappa + other.v_kappa,
        )

    def __neg__(self) -> "Cocycle":
        return Cocycle(-self.v_rho, -self.v_tau, -self.v_kappa)

    def __sub__(self, other: "Cocycle") -> "Cocycle":
        return self + (-other)

    def __str__(self) -> str:
        return format_cocycle(self)


ZERO_COCYCLE = Cocycle(ZERO_VECTOR, ZERO_VECTOR, ZERO_VECTOR)


def validate_cocycle(
    v_rho: InnerVector, v_tau: InnerVector, v_kappa: InnerVector
) -> Cocycle:
    """Build a Cocycle, raising RelatorViolation on a bad value triple.

    >>> validate_cocycle(ZERO_VECTOR, ZERO_VECTOR, ZERO_VECTOR) == ZERO_COCYCLE
    True
    >>> try:
    ...     validate_cocycle(InnerVector(0, 1), ZERO_VECTOR, ZERO_VECTOR)
    ... except RelatorViolation as exc:
    ...     print(exc.relator)
    rho tau rho = tau rho tau
    """
    return Cocycle(v_rho, v_tau, v_kappa)


def extend(phi: Cocycle, w: GeneratorWord) -> InnerVector:
    """phi evaluated on eval_word(w) by folding the cocycle identity.

    Depends only on the matrix the word evaluates to, since phi is
    relator-checked.

    >>> extend(ZERO_COCYCLE, gl2.parse_word("A B A")) == ZERO_VECTOR
    True
    """
    return _extend_values(phi.v_rho, phi.v_tau, phi.v_kappa, w.letters)


def coboundary(a: InnerVector) -> Cocycle:
    """The cocycle g -> g.a - a.

    >>> coboundary(InnerVector(0, 1)).v_rho
    InnerVector(p=1, q=0)
    >>> coboundary(InnerVector(1, 0)).v_tau
    InnerVector(p=0, q=-1)
    """
    return Cocycle(
        act(gl2.A, a) - a,
        act(gl2.B, a) - a,
        act(gl2.D, a) - a,
    )


def solve_coboundary(phi: Cocycle) -> InnerVector:
    """The unique a with coboundary(a) = phi.

    (A - I)a = (a2, 0) and (B - I)a = (0, -a1), so the rho and tau
    values determine a = (-phi(tau)_2, phi(rho)_1); the remaining
    constraints are consistency checks.  They never fail on validated
    cocycles: that is the computable content of H^1 = 0 here.

    >>> solve_coboundary(coboundary(InnerVector(3, -2)))
    InnerVector(p=3, q=-2)
    """
    a = InnerVector(-phi.v_tau.q, phi.v_rho.p)
    if coboundary(a) != phi:
        raise InconsistencyError(f"no a in Z+Z has g.a - a matching {phi}")
    return a


_FLAT_ORDER = (Letter.RHO, Letter.TAU, Letter.KAPPA)


def _flatten(phi_values: tuple[InnerVector, InnerVector, InnerVector]) -> Vector:
    return tuple(c for v in phi_values for c in (v.p, v.q))


@dataclass(frozen=True, slots=True)
class LatticeReport:
    """Solution lattice of the relator system on generator value triples,
    flattened as (rho.p, rho.q, tau.p, tau.q, kappa.p, kappa.q)."""

    rank: int
    basis: tuple[Vector, ...]
    coboundary_basis: tuple[Vector, ...]
    equals_coboundary_lattice: bool


def cocycle_lattice() -> LatticeReport:
    """Solve the relator constraints over Z and compare against the
    coboundary lattice.

    Each relator extension is linear in the six unknown coordinates, so
    its matrix is read off by extending unit value triples; the five
    relators give a 10 x 6 integer system whose kernel is the cocycle
    lattice.

    >>> report = cocycle_lattice()
    >>> report.rank, report.equals_coboundary_lattice
    (2, True)
    """
    units = []
    for slot in range(6):
        coords = [0] * 6
        coords[slot] = 1
        units.append(
            tuple(
                InnerVector(coords[2 * i], coords[2 * i + 1])
                for i in range(3)
            )
        )
    rows = []
    for _, pairs in gl2.RELATORS:
        images = [_extend_values(*unit, pairs) for unit in units]
        rows.append([v.p for v in images])
        rows.append([v.q for v in images])
    basis = tuple(kernel_basis(rows))
    cob_basis = tuple(
        _flatten((phi.v_rho, phi.v_tau, phi.v_kappa))
        for phi in (coboundary(InnerVector(1, 0)), coboundary(InnerVector(0, 1)))
    )
    return LatticeReport(
        rank=len(basis),
        basis=basis,
        coboundary_basis=cob_basis,
        equals_coboundary_lattice=lattices_equal(basis, cob_basis),
    )


def in_cocycle_lattice(phi: Cocycle, report: LatticeReport) -> bool:
    """Membership of a cocycle's flattened values in the solution lattice."""
    return in_lattice(_flatten((phi.v_rho, phi.v_tau, phi.v_kappa)), report.basis)


@dataclass(frozen=True, slots=True)
class SectionOnGenerators:
    """A homomorphic section of the projection Aut(G) -> GL(2,Z), given
    by its values on rho, tau, kappa.  Construction checks that each
    value projects onto the matching generator matrix and that the five
    relators hold at the automorphism level, which is exactly what makes
    the assignment extend to a well-defined section on all of GL(2,Z)."""

    alpha_rho: Automorphism
    alpha_tau: Automorphism
    alpha_kappa: Automorphism

    def __post_init__(self) -> None:
        for sym in _FLAT_ORDER:
            got = self.value(sym).matrix
            want = _GEN_MATRIX[sym]
            if got != want:
                raise ValueError(
                    f"value on {sym.name.lower()} must project to {want}, got {got}"
                )
        for name, pairs in gl2.RELATORS:
            result = IDENTITY_AUT
            for sym, exp in pairs:
                result = compose(result, aut_power(self.value(sym), exp))
            if result != IDENTITY_AUT:
                raise RelatorViolation(name, f"evaluates to {result}, not id")

    def value(self, sym: Letter) -> Automorphism:
        if sym is Letter.RHO:
            return self.alpha_rho
        if sym is Letter.TAU:
            return self.alpha_tau
        return self.alpha_kappa

    def at(self, m: Gl2Matrix, strategy: str = "left") -> Automorphism:
        """The section evaluated on an arbitrary matrix, via decompose."""
        result = IDENTITY_AUT
        for sym, exp in gl2.decompose(m, strategy).letters:
            result = compose(result, aut_power(self.value(sym), exp))
        return result

    def __str__(self) -> str:
        return format_section(self)


def canonical_section() -> SectionOnGenerators:
    """The section with the standard generator images: A and B act with
    zero center offsets, D sends y to (0, 1, -1)."""
    return SectionOnGenerators(
        Automorphism(gl2.A, 0, 0),
        Automorphism(gl2.B, 0, 0),
        Automorphism(gl2.D, 0, -1),
    )


def section_difference(
    alpha2: SectionOnGenerators, alpha1: SectionOnGenerators
) -> Cocycle:
    """The cocycle g -> alpha2(g) * alpha1(g)^-1, read generator-wise.

    The difference lands in the kernel of the projection, i.e. in the
    inner automorphisms (I, r, u), identified with Z + Z as (u, -r).
    """
    vals = []
    for sym in _FLAT_ORDER:
        delta = compose(alpha2.value(sym), invert(alpha1.value(sym)))
        vals.append(InnerVector(delta.u, -delta.r))
    return Cocycle(*vals)


def twist(sigma0: SectionOnGenerators, phi: Cocycle) -> SectionOnGenerators:
    """The section g -> inner(phi(g)) * sigma0(g).  Twisting by a valid
    cocycle preserves all five relators; together with
    section_difference this makes the set of sections a single Z + Z
    orbit.

    >>> twist(canonical_section(), ZERO_COCYCLE) == canonical_section()
    True
    """
    return SectionOnGenerators(
        *(compose(inner(phi.value(sym)), sigma0.value(sym)) for sym in _FLAT_ORDER)
    )


_PAIR = r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)"
_COCYCLE_RE = re.compile(
    r"\{\s*rho\s*=\s*" + _PAIR + r"\s*,\s*tau\s*=\s*" + _PAIR
    + r"\s*,\s*kappa\s*=\s*" + _PAIR + r"\s*\}"
)


def parse_cocycle(text: str) -> Cocycle:
    """Parse "{rho=(p,q), tau=(p,q), kappa=(p,q)}" (validates on build).

    >>> parse_cocycle("{rho=(0,0), tau=(0,0), kappa=(0,0)}") == ZERO_COCYCLE
    True
    """
    m = _COCYCLE_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(
            f"not a cocycle '{{rho=(p,q), tau=(p,q), kappa=(p,q)}}': {text!r}"
        )
    nums = [int(g) for g in m.groups()]
    return Cocycle(
        InnerVector(nums[0], nums[1]),
        InnerVector(nums[2], nums[3]),
        InnerVector(nums[4], nums[5]),
    )


def format_cocycle(phi: Cocycle) -> str:
    return f"{{rho={phi.v_rho}, tau={phi.v_tau}, kappa={phi.v_kappa}}}"


_SECTION_RE = re.compile(
    r"\{\s*rho\s*=\s*(\{.*?\})\s*,\s*tau\s*=\s*(\{.*?\})\s*,\s*kappa\s*=\s*(\{.*?\})\s*\}"
)


def parse_section(text: str) -> SectionOnGenerators:
    """Parse "{rho={M=..,r=..,u=..}, tau={..}, kappa={..}}"."""
    m = _SECTION_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(
            f"not a section '{{rho={{..}}, tau={{..}}, kappa={{..}}}}': {text!r}"
        )
    return SectionOnGenerators(*(parse_automorphism(g) for g in m.groups()))


def format_section(alpha: SectionOnGenerators) -> str:
    return (
        f"{{rho={alpha.alpha_rho}, tau={alpha.alpha_tau}, "
        f"kappa={alpha.alpha_kappa}}}"
    )
