"""The right action of the quotient group on the integer lattice.

Identifying exponent vectors with points of Z^n, right multiplication
by a generator becomes the affine map

    (a . x_i)_j = a[p_i(j)] + delta_ij,

a coordinate permutation followed by a unit shift: a Euclidean isometry
of Z^n that extends verbatim to R^n.  Products of the generator
isometries and their inverses realize the whole quotient group; this
module certifies, exhaustively within bounds, that

  * the lattice action matches right multiplication in the semigroup
    (the decisive oracle for the permutation part p_i, which is taken
    as phi(u_i) or its inverse, whichever the oracle confirms),
  * no non-identity element reachable at a given word length has a
    fixed point (freeness), fixed-point sets being solved exactly by
    cycle analysis of the permutation part,
  * the orbit of the origin tiles a requested box exactly once, so the
    unit cube is a fundamental domain,

and classifies the n = 2 isometries into translations and glide
reflections.  All arithmetic is exact (integers and rationals).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    CheckResult,
    ConsistencyError,
    DegreeBoundError,
    InputError,
    Perm,
    expvecs_up_to,
    format_expvec,
)
from .istructure import v_inverse, v_of
from .structuremaps import PhiMap, phi_of

Point = tuple  # integer (or rational) coordinates


@dataclass(frozen=True)
class AffineIso:
    """A coordinate permutation plus an integer translation, acting on
    row vectors on the right: act(a)_j = a[perm(j)] + shift_j."""

    perm: Perm
    shift: tuple[int, ...]

    def __post_init__(self):
        if self.perm.n != len(self.shift):
            raise InputError("permutation and shift dimensions differ")

    @property
    def n(self) -> int:
        return len(self.shift)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.shift)

    @staticmethod
    def identity(n: int) -> "AffineIso":
        return AffineIso(Perm.identity(n), (0,) * n)


def act(g: AffineIso, a: Point) -> Point:
    """Apply the isometry to a point (integer or rational coordinates)."""
    if len(a) != g.n:
        raise InputError(f"point has dimension {len(a)}, isometry {g.n}")
    return tuple(a[g.perm(j) - 1] + g.shift[j - 1] for j in range(1, g.n + 1))


def compose(g: AffineIso, h: AffineIso) -> AffineIso:
    """The product 'g then h' of the right action:
    act(compose(g, h), a) = act(h, act(g, a))."""
    if g.n != h.n:
        raise InputError("dimension mismatch")
    perm = Perm(tuple(g.perm(h.perm(j)) for j in range(1, g.n + 1)))
    shift = tuple(g.shift[h.perm(j) - 1] + h.shift[j - 1] for j in range(1, g.n + 1))
    return AffineIso(perm, shift)


def invert(g: AffineIso) -> AffineIso:
    inv = g.perm.inverse()
    shift = tuple(-g.shift[inv(j) - 1] for j in range(1, g.n + 1))
    return AffineIso(inv, shift)


@dataclass(frozen=True)
class FixedPointSet:
    """Exact solution set of act(g, a) = a over the rationals: empty, or
    an affine subspace with one free parameter per permutation cycle."""

    empty: bool
    dim: int  # -1 when empty
    point: Point | None  # a sample fixed point (integral for integer shifts)


def fixed_points(g: AffineIso) -> FixedPointSet:
    """Cycle analysis: along each cycle of the permutation part the
    equations chain into a telescoping sum, so a cycle is solvable iff
    its shift-sum vanishes, contributing one free parameter."""
    sample = [None] * g.n
    cycles = g.perm.cycles()
    for cyc in cycles:
        if sum(g.shift[j - 1] for j in cyc) != 0:
            return FixedPointSet(True, -1, None)
        val = 0
        for j in cyc:  # a[p(j)] = a[j] - s_j, walking the cycle
            sample[j - 1] = val
            val -= g.shift[j - 1]
    return FixedPointSet(False, len(cycles), tuple(sample))


def generator_isometry(pm: PhiMap, i: int, convention: str | None = None) -> AffineIso:
    """The affine map of generator i: permutation part phi(u_i) (or its
    inverse, per the resolved convention), unit shift in coordinate i."""
    if not pm.table.sigma.is_identity():
        raise InputError("the lattice action requires a table built with sigma = id")
    if convention is None:
        convention = resolve_convention(pm)
    p = phi_of(pm, tuple(1 if j == i else 0 for j in range(1, pm.n + 1)))
    if convention == "phi-inverse":
        p = p.inverse()
    shift = tuple(1 if j == i else 0 for j in range(1, pm.n + 1))
    return AffineIso(p, shift)


def affine_generators(pm: PhiMap, convention: str | None = None) -> list[AffineIso]:
    if convention is None:
        convention = resolve_convention(pm)
    return [generator_isometry(pm, i, convention) for i in range(1, pm.n + 1)]


def resolve_convention(pm: PhiMap) -> str:
    """Decide whether the permutation part of the generator isometries is
    phi(u_i) or its inverse, by running the action-consistency oracle at
    a small bound.  The choice is fixed once per phi map and cached."""
    cached = getattr(pm, "_iso_convention", None)
    if cached is not None:
        return cached
    bound = min(2, pm.D - 1)
    for convention in ("phi", "phi-inverse"):
        if check_action_consistency(pm, bound, convention):
            pm._iso_convention = convention
            return convention
    raise ConsistencyError("neither phi nor its inverse matches right multiplication")


def check_action_consistency(pm: PhiMap, bound: int, convention: str | None = None) -> CheckResult:
    """The decisive oracle: for every lattice point of degree <= bound and
    every generator, the affine image equals the decoding of 'canonical
    word times one more letter', i.e. the action really is right
    multiplication transported through v."""
    if bound + 1 > pm.D:
        raise DegreeBoundError(f"consistency to bound {bound} needs D >= {bound + 1}")
    table = pm.table
    if convention is None:
        convention = resolve_convention(pm)
    gens = [generator_isometry(pm, i, convention) for i in range(1, pm.n + 1)]
    for a in expvecs_up_to(pm.n, bound):
        w = v_of(table, a)
        for i in range(1, pm.n + 1):
            geometric = act(gens[i - 1], a)
            algebraic = v_inverse(table, w + (i,))
            if geometric != algebraic:
                return CheckResult.failed(
                    f"at a={format_expvec(a)}, generator {i}: affine image "
                    f"{geometric} but right multiplication gives {algebraic}"
                )
    return CheckResult.passed()


SignedWord = tuple[int, ...]  # i for a generator, -i for its inverse


def format_signed_word(w: SignedWord, names: tuple[str, ...] | None = None) -> str:
    if not w:
        return "1"
    parts = []
    for s in w:
        name = names[abs(s) - 1] if names else f"x{abs(s)}"
        parts.append(name if s > 0 else name + "^-1")
    return " ".join(parts)


@dataclass(frozen=True)
class GroupElement:
    word: SignedWord
    iso: AffineIso


def _signed_generators(gens: list[AffineIso]) -> list[tuple[int, AffineIso]]:
    out = [(i, g) for i, g in enumerate(gens, start=1)]
    out.extend((-i, invert(g)) for i, g in enumerate(gens, start=1))
    return out


@dataclass(frozen=True)
class FreenessReport:
    ok: bool
    witness: str
    relations: tuple[SignedWord, ...]  # reduced words evaluating to the identity
    isometries_seen: int


def freeness_check(pm: PhiMap, L: int, generators: list[AffineIso] | None = None) -> FreenessReport:
    """Enumerate every reduced word in the generators and inverses up to
    length L.  A non-identity isometry with a fixed point fails the
    check; identity isometries from non-empty words are relations of the
    group, recorded, never failures."""
    gens = affine_generators(pm) if generators is None else generators
    signed = _signed_generators(gens)
    verdict: dict[AffineIso, FixedPointSet] = {}
    relations: list[SignedWord] = []
    frontier = [GroupElement((), AffineIso.identity(pm.n))]
    seen_isos = {frontier[0].iso}
    for _ in range(L):
        nxt = []
        for el in frontier:
            last = el.word[-1] if el.word else 0
            for s, g in signed:
                if s == -last:
                    continue  # cancellation: not a reduced word
                word = el.word + (s,)
                iso = compose(el.iso, g)
                nxt.append(GroupElement(word, iso))
                seen_isos.add(iso)
                if iso.is_identity():
                    relations.append(word)
                    continue
                fp = verdict.get(iso)
                if fp is None:
                    fp = fixed_points(iso)
                    verdict[iso] = fp
                if not fp.empty:
                    return FreenessReport(
                        False,
                        f"word {format_signed_word(word)} is not the identity yet "
                        f"fixes {fp.point}",
                        tuple(relations),
                        len(seen_isos),
                    )
        frontier = nxt
    relations.sort(key=lambda w: (len(w), w))
    return FreenessReport(True, "", tuple(relations), len(seen_isos))


@dataclass(frozen=True)
class TilingReport:
    status: str  # "pass" | "inconclusive" | "fail"
    witness: str
    orbit_size: int
    covered: int  # box points hit by the orbit of the origin
    missed: tuple[Point, ...]


def fundamental_domain_check(
    pm: PhiMap, box: int, L: int, generators: list[AffineIso] | None = None
) -> TilingReport:
    """Orbit of the origin under all elements of word length <= L:
    distinct isometries must reach distinct points (simple transitivity),
    and every lattice point of the radius-`box` cube must be reached once
    L is large enough.  Missing points with no injectivity violation is
    'inconclusive', not failure."""
    gens = affine_generators(pm) if generators is None else generators
    signed = _signed_generators(gens)
    origin = (0,) * pm.n
    owner: dict[Point, SignedWord] = {origin: ()}
    seen: dict[AffineIso, SignedWord] = {AffineIso.identity(pm.n): ()}
    frontier = list(seen.items())
    for _ in range(L):
        nxt = []
        for iso, word in frontier:
            for s, g in signed:
                new = compose(iso, g)
                if new in seen:
                    continue
                nw = word + (s,)
                seen[new] = nw
                nxt.append((new, nw))
                pt = act(new, origin)
                if pt in owner:
                    return TilingReport(
                        "fail",
                        f"distinct elements {format_signed_word(owner[pt])} and "
                        f"{format_signed_word(nw)} both send the origin to {pt}",
                        len(seen),
                        0,
                        (),
                    )
                owner[pt] = nw
        frontier = nxt
    box_points = list(_box_points(pm.n, box))
    missed = tuple(pt for pt in box_points if pt not in owner)
    covered = len(box_points) - len(missed)
    if missed:
        return TilingReport(
            "inconclusive",
            f"{len(missed)} of {len(box_points)} box points not reached at "
            f"word length {L}; raise L",
            len(seen),
            covered,
            missed,
        )
    return TilingReport("pass", "", len(seen), covered, ())


def _box_points(n: int, radius: int):
    if n == 0:
        yield ()
        return
    for rest in _box_points(n - 1, radius):
        for v in range(-radius, radius + 1):
            yield (v,) + rest


@dataclass(frozen=True)
class Isometry2D:
    """Classification of a planar isometry with permutation part id or
    the swap: identity, translation, or glide reflection along the main
    diagonal direction (a pure reflection is the degenerate glide with
    zero glide vector)."""

    kind: str  # "identity" | "translation" | "glide-reflection"
    translation: tuple[int, int] | None = None
    axis_direction: tuple[int, int] | None = None
    glide_vector: tuple[Fraction, Fraction] | None = None
    axis_offset: Fraction | None = None  # the value of a1 - a2 on the axis


def classify_isometry_2d(g: AffineIso) -> Isometry2D:
    """Exact closed forms: a swap-part isometry moves points of the line
    a1 - a2 = (s1 - s2)/2 along the direction (1,1) by (s1 + s2)/2."""
    if g.n != 2:
        raise InputError(f"planar classification needs n = 2, got {g.n}")
    if g.perm.is_identity():
        if not any(g.shift):
            return Isometry2D("identity")
        return Isometry2D("translation", translation=g.shift)
    if g.perm.images != (2, 1):
        raise InputError(f"permutation part {g.perm.images} is neither id nor the swap")
    s1, s2 = g.shift
    glide = Fraction(s1 + s2, 2)
    return Isometry2D(
        "glide-reflection",
        axis_direction=(1, 1),
        glide_vector=(glide, glide),
        axis_offset=Fraction(s1 - s2, 2),
    )


def export_affine_group(
    gens: list[AffineIso],
    names: tuple[str, ...] | None = None,
    relations: tuple[SignedWord, ...] = (),
) -> str:
    """One line per generator, then the relations detected at the
    explored word length."""
    lines = []
    for i, g in enumerate(gens, start=1):
        name = names[i - 1] if names else f"x{i}"
        perm = ",".join(str(k) for k in g.perm.images)
        shift = ",".join(str(k) for k in g.shift)
        lines.append(f"gen {name} perm={perm} shift={shift}")
    for w in relations:
        lines.append(f"rel {format_signed_word(w, names)} = 1")
    return "\n".join(lines) + "\n"
