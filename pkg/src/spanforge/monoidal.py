"""Monoidal, braided, and symmetric structures on finite categories.

Structure data is stored as full component tables (associators, unitors,
braidings, multiplicativity cells), never as formulas or strictness flags;
the checkers scan every instance of every coherence law and report witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fincat import (
    Budget,
    FinCategory,
    Functor,
    NatTrans,
    ProductCategory,
    StructureError,
    check_functor,
    check_nat_trans,
    compose_functors,
    full_subcategory,
    horizontal_composite,
    identity_nat_trans,
    product_category,
    vertical_composite,
)
from .groups import GroupTable, validate_group
from .reporting import DEFAULT_VIOLATION_CAP, Report, ReportBuilder


@dataclass(frozen=True)
class MonoidalStructure:
    """Tensor bifunctor, unit object, and associator/unitor component tables.

    ``associator[(x*n + y)*n + z]`` is the component (x⊗y)⊗z -> x⊗(y⊗z);
    unitor tables are indexed by object id.
    """

    base: FinCategory
    square: ProductCategory
    tensor: Functor
    unit: int
    associator: tuple[int, ...]
    left_unitor: tuple[int, ...]
    right_unitor: tuple[int, ...]

    def tensor_obj(self, x: int, y: int) -> int:
        return self.tensor.object_map[self.square.object_pair(x, y)]

    def tensor_mor(self, f: int, g: int) -> int:
        return self.tensor.morphism_map[self.square.morphism_pair(f, g)]

    def alpha(self, x: int, y: int, z: int) -> int:
        n = self.base.num_objects
        return self.associator[(x * n + y) * n + z]

    def alpha_inv(self, x: int, y: int, z: int) -> int:
        inv = self.base.inverse(self.alpha(x, y, z))
        if inv is None:
            raise StructureError(f"associator at ({x}, {y}, {z}) is not invertible")
        return inv


@dataclass(frozen=True)
class Braiding:
    """Braiding components beta[x*n + y]: x⊗y -> y⊗x on a monoidal structure."""

    on: MonoidalStructure
    beta: tuple[int, ...]

    def at(self, x: int, y: int) -> int:
        return self.beta[x * self.on.base.num_objects + y]


@dataclass(frozen=True)
class MonFunctor:
    """A functor with multiplicativity cells F(x)⊗F(y) -> F(x⊗y) and unit cell."""

    source: MonoidalStructure
    target: MonoidalStructure
    underlying: Functor
    mult: tuple[int, ...]
    unit_iso: int

    def on_obj(self, x: int) -> int:
        return self.underlying.object_map[x]

    def on_mor(self, f: int) -> int:
        return self.underlying.morphism_map[f]

    def gamma(self, x: int, y: int) -> int:
        return self.mult[x * self.source.base.num_objects + y]

    def gamma_inv(self, x: int, y: int) -> int:
        inv = self.target.base.inverse(self.gamma(x, y))
        if inv is None:
            raise StructureError(f"multiplicativity cell at ({x}, {y}) is not invertible")
        return inv


@dataclass(frozen=True)
class MonNatTrans:
    source: MonFunctor
    target: MonFunctor
    underlying: NatTrans


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def _check_tensor_bifunctor(ms: MonoidalStructure, rb: ReportBuilder) -> None:
    base = ms.base
    if ms.square.left != base or ms.square.right != base:
        raise StructureError("tensor square is not base × base")
    if ms.tensor.source != ms.square.category or ms.tensor.target != base:
        raise StructureError("tensor functor has the wrong shape")
    if not 0 <= ms.unit < base.num_objects:
        raise StructureError(f"unit object {ms.unit} is dangling")
    n = base.num_objects
    if len(ms.associator) != n ** 3:
        raise StructureError("associator table has the wrong length")
    if len(ms.left_unitor) != n or len(ms.right_unitor) != n:
        raise StructureError("unitor table has the wrong length")
    sub = check_functor(ms.tensor)
    for v in sub.violations:
        rb.add("tensor-" + v.law, v.witness, v.detail)


def _component_ok(base: FinCategory, mor: int, src: int, tgt: int) -> str | None:
    if not 0 <= mor < base.num_morphisms:
        return f"dangling morphism id {mor}"
    if base.source[mor] != src or base.target[mor] != tgt:
        return (f"endpoints {base.source[mor]} -> {base.target[mor]}, "
                f"expected {src} -> {tgt}")
    return None


def check_monoidal(ms: MonoidalStructure, cap: int = DEFAULT_VIOLATION_CAP) -> Report:
    """Pentagon, triangle, and naturality/invertibility of all components."""
    rb = ReportBuilder("monoidal", cap)
    _check_tensor_bifunctor(ms, rb)
    base = ms.base
    n, m = base.num_objects, base.num_morphisms

    for x in range(n):
        for y in range(n):
            for z in range(n):
                a = ms.alpha(x, y, z)
                bad = _component_ok(base, a,
                                    ms.tensor_obj(ms.tensor_obj(x, y), z),
                                    ms.tensor_obj(x, ms.tensor_obj(y, z)))
                if bad:
                    rb.add("associator-component", (x, y, z), bad)
                elif not base.is_iso(a):
                    rb.add("associator-iso", (x, y, z), "component is not invertible")
                if rb.full:
                    return rb.report()
    for x in range(n):
        lam = ms.left_unitor[x]
        bad = _component_ok(base, lam, ms.tensor_obj(ms.unit, x), x)
        if bad:
            rb.add("left-unitor-component", (x,), bad)
        elif not base.is_iso(lam):
            rb.add("left-unitor-iso", (x,), "component is not invertible")
        rho = ms.right_unitor[x]
        bad = _component_ok(base, rho, ms.tensor_obj(x, ms.unit), x)
        if bad:
            rb.add("right-unitor-component", (x,), bad)
        elif not base.is_iso(rho):
            rb.add("right-unitor-iso", (x,), "component is not invertible")
        if rb.full:
            return rb.report()

    # ill-typed components make the law scans meaningless
    if any(v.law.endswith("-component") for v in rb.report().violations):
        return rb.report()

    # naturality of the associator in all three arguments at once
    for p in range(m):
        for q in range(m):
            pq = ms.tensor_mor(p, q)
            for r in range(m):
                lhs = base.comp[ms.alpha(base.target[p], base.target[q], base.target[r])][
                    ms.tensor_mor(pq, r)]
                rhs = base.comp[ms.tensor_mor(p, ms.tensor_mor(q, r))][
                    ms.alpha(base.source[p], base.source[q], base.source[r])]
                if lhs != rhs or lhs == -1:
                    rb.add("associator-naturality", (p, q, r),
                           f"paths {lhs} vs {rhs}")
                    if rb.full:
                        return rb.report()
    id_unit = base.identity[ms.unit]
    for p in range(m):
        x, y = base.source[p], base.target[p]
        lhs = base.comp[ms.left_unitor[y]][ms.tensor_mor(id_unit, p)]
        if lhs != base.comp[p][ms.left_unitor[x]] or lhs == -1:
            rb.add("left-unitor-naturality", (p,), "square does not commute")
        lhs = base.comp[ms.right_unitor[y]][ms.tensor_mor(p, id_unit)]
        if lhs != base.comp[p][ms.right_unitor[x]] or lhs == -1:
            rb.add("right-unitor-naturality", (p,), "square does not commute")
        if rb.full:
            return rb.report()

    for w in range(n):
        id_w = base.identity[w]
        for x in range(n):
            wx = ms.tensor_obj(w, x)
            for y in range(n):
                xy = ms.tensor_obj(x, y)
                for z in range(n):
                    id_z = base.identity[z]
                    lhs = base.compose_path(
                        ms.tensor_mor(id_w, ms.alpha(x, y, z)),
                        ms.alpha(w, xy, z),
                        ms.tensor_mor(ms.alpha(w, x, y), id_z))
                    rhs = base.comp[ms.alpha(w, x, ms.tensor_obj(y, z))][
                        ms.alpha(wx, y, z)]
                    if lhs != rhs:
                        rb.add("pentagon", (w, x, y, z), f"paths {lhs} vs {rhs}")
                        if rb.full:
                            return rb.report()
    for x in range(n):
        for y in range(n):
            lhs = base.comp[ms.tensor_mor(base.identity[x], ms.left_unitor[y])][
                ms.alpha(x, ms.unit, y)]
            rhs = ms.tensor_mor(ms.right_unitor[x], base.identity[y])
            if lhs != rhs:
                rb.add("triangle", (x, y), f"paths {lhs} vs {rhs}")
                if rb.full:
                    return rb.report()
    return rb.report()


def check_braiding(b: Braiding, cap: int = DEFAULT_VIOLATION_CAP) -> Report:
    """Invertibility, naturality, and both hexagon identities."""
    rb = ReportBuilder("braiding", cap)
    ms = b.on
    base = ms.base
    n, m = base.num_objects, base.num_morphisms
    if len(b.beta) != n * n:
        raise StructureError("braiding table has the wrong length")

    for x in range(n):
        for y in range(n):
            c = b.at(x, y)
            bad = _component_ok(base, c, ms.tensor_obj(x, y), ms.tensor_obj(y, x))
            if bad:
                rb.add("braiding-component", (x, y), bad)
            elif not base.is_iso(c):
                rb.add("braiding-iso", (x, y), "component is not invertible")
            if rb.full:
                return rb.report()
    for p in range(m):
        for q in range(m):
            x0, y0 = base.source[p], base.source[q]
            x1, y1 = base.target[p], base.target[q]
            lhs = base.comp[b.at(x1, y1)][ms.tensor_mor(p, q)]
            rhs = base.comp[ms.tensor_mor(q, p)][b.at(x0, y0)]
            if lhs != rhs or lhs == -1:
                rb.add("braiding-naturality", (p, q), f"paths {lhs} vs {rhs}")
                if rb.full:
                    return rb.report()
    for x in range(n):
        for y in range(n):
            for z in range(n):
                try:
                    lhs = base.compose_path(
                        ms.alpha(y, z, x),
                        b.at(x, ms.tensor_obj(y, z)),
                        ms.alpha(x, y, z))
                    rhs = base.compose_path(
                        ms.tensor_mor(base.identity[y], b.at(x, z)),
                        ms.alpha(y, x, z),
                        ms.tensor_mor(b.at(x, y), base.identity[z]))
                except StructureError:
                    rb.add("hexagon-forward", (x, y, z), "paths do not compose")
                    continue
                if lhs != rhs:
                    rb.add("hexagon-forward", (x, y, z), f"paths {lhs} vs {rhs}")
                try:
                    lhs = base.compose_path(
                        ms.alpha_inv(z, x, y),
                        b.at(ms.tensor_obj(x, y), z),
                        ms.alpha_inv(x, y, z))
                    rhs = base.compose_path(
                        ms.tensor_mor(b.at(x, z), base.identity[y]),
                        ms.alpha_inv(x, z, y),
                        ms.tensor_mor(base.identity[x], b.at(y, z)))
                except StructureError:
                    rb.add("hexagon-reverse", (x, y, z), "paths do not compose")
                    continue
                if lhs != rhs:
                    rb.add("hexagon-reverse", (x, y, z), f"paths {lhs} vs {rhs}")
                if rb.full:
                    return rb.report()
    return rb.report()


def is_symmetric(b: Braiding) -> bool:
    """True iff every double braiding beta_{y,x}∘beta_{x,y} is an identity."""
    ms = b.on
    base = ms.base
    n = base.num_objects
    for x in range(n):
        for y in range(n):
            if base.comp[b.at(y, x)][b.at(x, y)] != base.identity[ms.tensor_obj(x, y)]:
                return False
    return True


def check_mon_functor(mf: MonFunctor, cap: int = DEFAULT_VIOLATION_CAP) -> Report:
    """Functor laws plus associativity and unit coherence of (gamma, eta)."""
    rb = ReportBuilder("mon_functor", cap)
    src, tgt = mf.source, mf.target
    if mf.underlying.source != src.base or mf.underlying.target != tgt.base:
        raise StructureError("underlying functor does not match the monoidal structures")
    n = src.base.num_objects
    if len(mf.mult) != n * n:
        raise StructureError("multiplicativity table has the wrong length")
    sub = check_functor(mf.underlying)
    for v in sub.violations:
        rb.add("underlying-" + v.law, v.witness, v.detail)
    base = tgt.base

    bad = _component_ok(base, mf.unit_iso, tgt.unit, mf.on_obj(src.unit))
    if bad:
        rb.add("unit-cell", (), bad)
    elif not base.is_iso(mf.unit_iso):
        rb.add("unit-cell-iso", (), "unit cell is not invertible")

    for x in range(n):
        for y in range(n):
            g = mf.gamma(x, y)
            bad = _component_ok(base, g,
                                tgt.tensor_obj(mf.on_obj(x), mf.on_obj(y)),
                                mf.on_obj(src.tensor_obj(x, y)))
            if bad:
                rb.add("mult-cell", (x, y), bad)
            elif not base.is_iso(g):
                rb.add("mult-cell-iso", (x, y), "component is not invertible")
            if rb.full:
                return rb.report()
    if any(v.law in ("mult-cell", "unit-cell") for v in rb.report().violations):
        return rb.report()
    # naturality of gamma in both arguments
    for p in range(src.base.num_morphisms):
        for q in range(src.base.num_morphisms):
            x0, y0 = src.base.source[p], src.base.source[q]
            x1, y1 = src.base.target[p], src.base.target[q]
            lhs = base.comp[mf.gamma(x1, y1)][
                tgt.tensor_mor(mf.on_mor(p), mf.on_mor(q))]
            rhs = base.comp[mf.on_mor(src.tensor_mor(p, q))][mf.gamma(x0, y0)]
            if lhs != rhs or lhs == -1:
                rb.add("mult-naturality", (p, q), f"paths {lhs} vs {rhs}")
                if rb.full:
                    return rb.report()
    for x in range(n):
        for y in range(n):
            xy = src.tensor_obj(x, y)
            for z in range(n):
                lhs = base.compose_path(
                    mf.on_mor(src.alpha(x, y, z)),
                    mf.gamma(xy, z),
                    tgt.tensor_mor(mf.gamma(x, y), base.identity[mf.on_obj(z)]))
                rhs = base.compose_path(
                    mf.gamma(x, src.tensor_obj(y, z)),
                    tgt.tensor_mor(base.identity[mf.on_obj(x)], mf.gamma(y, z)),
                    tgt.alpha(mf.on_obj(x), mf.on_obj(y), mf.on_obj(z)))
                if lhs != rhs:
                    rb.add("mult-associativity", (x, y, z), f"paths {lhs} vs {rhs}")
                    if rb.full:
                        return rb.report()
    for x in range(n):
        fx = mf.on_obj(x)
        lhs = base.compose_path(
            mf.on_mor(src.left_unitor[x]),
            mf.gamma(src.unit, x),
            tgt.tensor_mor(mf.unit_iso, base.identity[fx]))
        if lhs != tgt.left_unitor[fx]:
            rb.add("left-unit-coherence", (x,), f"path {lhs} vs {tgt.left_unitor[fx]}")
        lhs = base.compose_path(
            mf.on_mor(src.right_unitor[x]),
            mf.gamma(x, src.unit),
            tgt.tensor_mor(base.identity[fx], mf.unit_iso))
        if lhs != tgt.right_unitor[fx]:
            rb.add("right-unit-coherence", (x,), f"path {lhs} vs {tgt.right_unitor[fx]}")
        if rb.full:
            return rb.report()
    return rb.report()


def check_mon_nattrans(t: MonNatTrans, cap: int = DEFAULT_VIOLATION_CAP) -> Report:
    """Naturality plus the multiplicativity square and unit condition."""
    rb = ReportBuilder("mon_nattrans", cap)
    f, g = t.source, t.target
    if f.source != g.source or f.target != g.target:
        raise StructureError("monoidal transformation between mismatched functors")
    if t.underlying.source != f.underlying or t.underlying.target != g.underlying:
        raise StructureError("underlying transformation does not match the functors")
    sub = check_nat_trans(t.underlying)
    for v in sub.violations:
        rb.add("underlying-" + v.law, v.witness, v.detail)
    src, tgt = f.source, f.target
    base = tgt.base
    comps = t.underlying.components
    n = src.base.num_objects
    for x in range(n):
        for y in range(n):
            lhs = base.comp[comps[src.tensor_obj(x, y)]][f.gamma(x, y)]
            rhs = base.comp[g.gamma(x, y)][tgt.tensor_mor(comps[x], comps[y])]
            if lhs != rhs or lhs == -1:
                rb.add("mult-square", (x, y), f"paths {lhs} vs {rhs}")
                if rb.full:
                    return rb.report()
    if base.comp[comps[src.unit]][f.unit_iso] != g.unit_iso:
        rb.add("unit-condition", (src.unit,), "triangle at the unit does not commute")
    return rb.report()


def check_braided_functor(mf: MonFunctor, b_src: Braiding, b_tgt: Braiding,
                          cap: int = DEFAULT_VIOLATION_CAP) -> Report:
    """check_mon_functor plus compatibility with the braidings."""
    if b_src.on != mf.source or b_tgt.on != mf.target:
        raise StructureError("braidings do not match the functor's structures")
    rb = ReportBuilder("braided_functor", cap)
    for v in check_mon_functor(mf, cap).violations:
        rb.add(v.law, v.witness, v.detail)
    base = mf.target.base
    n = mf.source.base.num_objects
    for x in range(n):
        for y in range(n):
            lhs = base.comp[mf.on_mor(b_src.at(x, y))][mf.gamma(x, y)]
            rhs = base.comp[mf.gamma(y, x)][b_tgt.at(mf.on_obj(x), mf.on_obj(y))]
            if lhs != rhs or lhs == -1:
                rb.add("braiding-compatibility", (x, y), f"paths {lhs} vs {rhs}")
                if rb.full:
                    return rb.report()
    return rb.report()


# ---------------------------------------------------------------------------
# constructors and composites
# ---------------------------------------------------------------------------

def identity_mon_functor(ms: MonoidalStructure) -> MonFunctor:
    base = ms.base
    n = base.num_objects
    return MonFunctor(ms, ms,
                      Functor(base, base, tuple(range(n)),
                              tuple(range(base.num_morphisms))),
                      tuple(base.identity[ms.tensor_obj(*divmod(i, n))]
                            for i in range(n * n)),
                      base.identity[ms.unit])


def compose_mon_functors(g: MonFunctor, f: MonFunctor) -> MonFunctor:
    """g∘f with pasted cells: gamma = g(gamma^f) ∘ gamma^g, eta = g(eta^f) ∘ eta^g."""
    if f.target != g.source:
        raise StructureError("monoidal functor composition: middle structures differ")
    base = g.target.base
    n = f.source.base.num_objects
    mult = []
    for x in range(n):
        for y in range(n):
            mult.append(base.compose(g.on_mor(f.gamma(x, y)),
                                     g.gamma(f.on_obj(x), f.on_obj(y))))
    unit_iso = base.compose(g.on_mor(f.unit_iso), g.unit_iso)
    return MonFunctor(f.source, g.target,
                      compose_functors(g.underlying, f.underlying),
                      tuple(mult), unit_iso)


def identity_mon_nattrans(f: MonFunctor) -> MonNatTrans:
    return MonNatTrans(f, f, identity_nat_trans(f.underlying))


def vcomp_mon_nattrans(b: MonNatTrans, a: MonNatTrans) -> MonNatTrans:
    if a.target != b.source:
        raise StructureError("vertical composition: middle monoidal functors differ")
    return MonNatTrans(a.source, b.target,
                       vertical_composite(b.underlying, a.underlying))


def hcomp_mon_nattrans(b: MonNatTrans, a: MonNatTrans) -> MonNatTrans:
    """b★a for a between functors C -> D and b between functors D -> E."""
    if a.source.target != b.source.source:
        raise StructureError("horizontal composition: structures do not meet")
    return MonNatTrans(compose_mon_functors(b.source, a.source),
                       compose_mon_functors(b.target, a.target),
                       horizontal_composite(b.underlying, a.underlying))


def make_skeletal_group_category(g: GroupTable, u: GroupTable,
                                 omega) -> MonoidalStructure:
    """Skeletal category: objects the group g, endomorphisms the abelian group u,
    tensor by multiplication, associator with scalar part omega(x, y, z).

    omega is indexed as omega[x][y][z] -> element of u.  Unitors carry the
    scalars omega(e,e,y)⁻¹ and omega(x,e,e), which are identities whenever
    omega is normalized.
    """
    validate_group(g)
    validate_group(u)
    if not u.is_abelian():
        raise StructureError("endomorphism scalars must form an abelian group")
    ng, nu = g.order, u.order

    def mor(obj: int, scalar: int) -> int:
        return obj * nu + scalar

    num_morphisms = ng * nu
    source = tuple(i // nu for i in range(num_morphisms))
    identity = tuple(mor(x, 0) for x in range(ng))
    comp = [[-1] * num_morphisms for _ in range(num_morphisms)]
    for x in range(ng):
        for a in range(nu):
            for b in range(nu):
                comp[mor(x, a)][mor(x, b)] = mor(x, u.mul(a, b))
    base = FinCategory(ng, source, source, identity,
                       tuple(tuple(row) for row in comp))
    square = product_category(base, base, Budget(max_objects=ng * ng + 1,
                                                 max_morphisms=num_morphisms ** 2 + 1))
    tensor_obj = tuple(g.mul(*square.object_factors(p))
                       for p in range(ng * ng))
    tensor_mor = []
    for k in range(num_morphisms ** 2):
        f1, f2 = square.morphism_factors(k)
        x1, a1 = divmod(f1, nu)
        x2, a2 = divmod(f2, nu)
        tensor_mor.append(mor(g.mul(x1, x2), u.mul(a1, a2)))
    tensor = Functor(square.category, base, tensor_obj, tuple(tensor_mor))
    associator = []
    for x in range(ng):
        for y in range(ng):
            for z in range(ng):
                associator.append(mor(g.mul(g.mul(x, y), z), omega[x][y][z]))
    left_unitor = tuple(mor(y, u.inv(omega[0][0][y])) for y in range(ng))
    right_unitor = tuple(mor(x, omega[x][0][0]) for x in range(ng))
    return MonoidalStructure(base, square, tensor, 0, tuple(associator),
                             left_unitor, right_unitor)


def trivial_cochain(g: GroupTable) -> tuple:
    n = g.order
    return tuple(tuple((0,) * n for _ in range(n)) for _ in range(n))


def make_discrete_group_category(g: GroupTable) -> MonoidalStructure:
    """Objects the group, identity morphisms only, strict monoidal structure."""
    from .groups import cyclic
    return make_skeletal_group_category(g, cyclic(1), trivial_cochain(g))


def make_bicharacter_braiding(ms: MonoidalStructure, u: GroupTable, c) -> Braiding:
    """Braiding with scalar part c[x][y] on a skeletal group category.

    The carrier group must be abelian so that x⊗y and y⊗x coincide; whether
    the result satisfies the hexagons is check_braiding's business.
    """
    n = ms.base.num_objects
    nu = u.order
    beta = []
    for x in range(n):
        for y in range(n):
            xy = ms.tensor_obj(x, y)
            if xy != ms.tensor_obj(y, x):
                raise StructureError("bicharacter braiding needs an abelian carrier")
            beta.append(xy * nu + c[x][y])
    return Braiding(ms, tuple(beta))


def terminal_monoidal() -> MonoidalStructure:
    from .groups import cyclic
    return make_discrete_group_category(cyclic(1))


def restrict_monoidal(ms: MonoidalStructure,
                      objects: tuple[int, ...]) -> tuple[MonoidalStructure, Functor]:
    """The monoidal structure induced on a tensor-closed full subcategory."""
    if ms.unit not in objects:
        raise StructureError("subcategory does not contain the unit")
    obj_index = {x: i for i, x in enumerate(objects)}
    for x in objects:
        for y in objects:
            if ms.tensor_obj(x, y) not in obj_index:
                raise StructureError(
                    f"subcategory is not closed under tensor at ({x}, {y})")
    sub, inclusion = full_subcategory(ms.base, objects)
    mor_index = {inclusion.morphism_map[i]: i for i in range(sub.num_morphisms)}
    square = product_category(sub, sub, Budget(sub.num_objects ** 2 + 1,
                                               sub.num_morphisms ** 2 + 1))
    tensor_obj = []
    for p in range(sub.num_objects ** 2):
        x, y = square.object_factors(p)
        tensor_obj.append(obj_index[ms.tensor_obj(objects[x], objects[y])])
    tensor_mor = []
    for k in range(sub.num_morphisms ** 2):
        f1, f2 = square.morphism_factors(k)
        img = ms.tensor_mor(inclusion.morphism_map[f1], inclusion.morphism_map[f2])
        if img not in mor_index:
            raise StructureError("subcategory is not closed under tensor of morphisms")
        tensor_mor.append(mor_index[img])
    tensor = Functor(square.category, sub, tuple(tensor_obj), tuple(tensor_mor))
    n = sub.num_objects
    associator = tuple(mor_index[ms.alpha(objects[x], objects[y], objects[z])]
                       for x in range(n) for y in range(n) for z in range(n))
    left_unitor = tuple(mor_index[ms.left_unitor[objects[x]]] for x in range(n))
    right_unitor = tuple(mor_index[ms.right_unitor[objects[x]]] for x in range(n))
    restricted = MonoidalStructure(sub, square, tensor, obj_index[ms.unit],
                                   associator, left_unitor, right_unitor)
    return restricted, inclusion


def restrict_braiding(b: Braiding, restricted: MonoidalStructure,
                      inclusion: Functor) -> Braiding:
    sub = restricted.base
    mor_index = {inclusion.morphism_map[i]: i for i in range(sub.num_morphisms)}
    n = sub.num_objects
    beta = tuple(mor_index[b.at(inclusion.object_map[x], inclusion.object_map[y])]
                 for x in range(n) for y in range(n))
    return Braiding(restricted, beta)
