"""Auslander-Reiten theory: translates, extensions, meshes, AR quivers.

The translate is computed exactly from a minimal projective presentation
P1 -> P0 -> M -> 0:  writing the presentation matrix with entries in the
corner spaces e_v A e_u, the transpose Tr M is the cokernel of the induced
map between projectives over the opposite algebra, and tau M = D Tr M.
Almost split sequences come from the simple socle of Ext^1(M, tau M) as a
module over End(M).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Bimodule,
    CapExceeded,
    NotBasic,
    PresentedAlgebra,
    StructureConstants,
    quiverize,
)
from .exactlin import Matrix, complement_basis, coordinates_in_basis, span_matrix
from .modrep import (
    Morphism,
    Representation,
    compose,
    decompose,
    direct_sum,
    dual,
    hom_basis,
    identity_morphism,
    image,
    kernel,
    morphism_coordinates,
    projective,
    quotient_rep,
    radical_rep,
    simple,
    socle_rep,
    top_data,
    zero_morphism,
    zero_rep,
    end_radical_morphisms,
    _iso_between_indecomposables,
    is_isomorphic,
)


class SocleNotOneDimensional(ArithmeticError):
    """The End-socle of Ext^1(M, tau M) is not simple; no almost split
    sequence can be extracted (input was not indecomposable non-projective,
    or the ground field is too small)."""


def dual_morphism(f: Morphism) -> Morphism:
    """D f: D(target) -> D(source) over the opposite algebra."""
    return Morphism(
        dual(f.target), dual(f.source), [b.transpose() for b in f.blocks], _checked=True
    )


# ---------------------------------------------------------------------------
# projective covers and minimal presentations


class ProjSum:
    """Direct sum of indecomposable projectives with path-indexed fibres.

    ``vertex_list`` gives the projective summands (vertex labels, with
    multiplicity, in order).  The fibre of the sum at a vertex w has basis
    indexed by pairs (summand position k, reduced word: vertex_list[k] -> w),
    ordered by summand then by the algebra's basis order.
    """

    def __init__(self, algebra: PresentedAlgebra, vertex_list):
        self.algebra = algebra
        self.vertex_list = [str(v) for v in vertex_list]
        q = algebra.quiver
        self.fibre_index = {}  # (k, word) -> position in fibre of target(word)
        fibre_count = [0] * q.n_vertices
        self.fibre_words = {w: [] for w in range(q.n_vertices)}
        for k, v in enumerate(self.vertex_list):
            vi = q.vertex_index[v]
            for word in algebra.basis:
                if word[0] != vi:
                    continue
                tgt = algebra.word_target(word)
                self.fibre_index[(k, word)] = fibre_count[tgt]
                self.fibre_words[tgt].append((k, word))
                fibre_count[tgt] += 1
        self.dims = tuple(fibre_count)
        fld = algebra.field
        maps = []
        for j in range(len(q.arrows)):
            x, y = q.arrow_source[j], q.arrow_target[j]
            mat = [[fld.zero()] * self.dims[x] for _ in range(self.dims[y])]
            for (k, word) in self.fibre_words[x]:
                col = self.fibre_index[(k, word)]
                prod = algebra.normal_form({(word[0], word[1] + (j,)): fld.one()})
                for w2, c in prod.items():
                    mat[self.fibre_index[(k, w2)]][col] = c
            maps.append(Matrix(fld, mat, self.dims[x]))
        self.rep = Representation(algebra, self.dims, maps, _checked=True)

    def generator_position(self, k):
        """Fibre position of the generator e_v of summand k (at vertex v)."""
        q = self.algebra.quiver
        vi = q.vertex_index[self.vertex_list[k]]
        return vi, self.fibre_index[(k, (vi, ()))]

    def component_elements(self, vertex, vec):
        """Decompose a fibre vector at ``vertex`` into per-summand elements.

        Returns dict k -> element dict of the algebra (paths from
        vertex_list[k] to ``vertex``).
        """
        fld = self.algebra.field
        out = {}
        for (k, word) in self.fibre_words[vertex]:
            c = vec[self.fibre_index[(k, word)]]
            if c != fld.zero():
                out.setdefault(k, {})[word] = c
        return out


@dataclass
class Presentation:
    """Minimal projective presentation P1 -> P0 -> M -> 0."""

    module: Representation
    p0: ProjSum
    cover: Morphism  # P0 -> M, projective cover
    omega: Representation  # ker(cover)
    omega_incl: Morphism  # omega -> P0
    p1: ProjSum  # cover of omega
    p1_cover: Morphism  # P1 -> omega
    differential: Morphism  # P1 -> P0


def projective_cover_data(m: Representation):
    """(ProjSum P0, cover morphism P0 -> m)."""
    a = m.algebra
    fld = a.field
    tops = top_data(m)
    ps = ProjSum(a, [v for v, _vec in tops])
    q = a.quiver
    blocks = []
    for w in range(q.n_vertices):
        cols = []
        for (k, word) in ps.fibre_words[w]:
            vec = tops[k][1]
            cols.append(_act(m, vec, word))
        if cols:
            blocks.append(Matrix(fld, list(zip(*cols)), len(cols)))
        else:
            blocks.append(Matrix.zero(fld, m.dims[w], 0))
    cover = Morphism(ps.rep, m, blocks, _checked=False)
    for w in range(q.n_vertices):
        if cover.blocks[w].rank() != m.dims[w]:
            raise ArithmeticError("projective cover is not surjective")
    return ps, cover


def _act(m: Representation, vec, word):
    fld = m.algebra.field
    out = list(vec)
    for a in word[1]:
        mat = m.maps[a]
        out = [
            _dot(fld, mat.rows[r], out) for r in range(mat.nrows)
        ]
    return tuple(out)


def _dot(fld, row, vec):
    acc = fld.zero()
    for a, b in zip(row, vec):
        if a != fld.zero() and b != fld.zero():
            acc = fld.add(acc, fld.mul(a, b))
    return acc


_presentation_cache: dict = {}


def minimal_presentation(m: Representation) -> Presentation:
    hit = _presentation_cache.get(m)
    if hit is not None:
        return hit
    p0, cover = projective_cover_data(m)
    omega, om_incl = kernel(cover)
    p1, p1_cover = projective_cover_data(omega)
    differential = compose(om_incl, p1_cover)
    pres = Presentation(m, p0, cover, omega, om_incl, p1, p1_cover, differential)
    _presentation_cache[m] = pres
    return pres


def syzygy(m: Representation, power: int = 1) -> Representation:
    out = m
    for _ in range(power):
        if out.is_zero():
            return out
        out = minimal_presentation(out).omega
    return out


def cosyzygy(m: Representation, power: int = 1) -> Representation:
    """Omega^{-k} via the opposite algebra: D syzygy(D m)."""
    if m.is_zero():
        return m
    return dual(syzygy(dual(m), power))


def injective_envelope_data(m: Representation):
    """(envelope I, embedding m -> I): dual of the cover of D m."""
    ps, cover = projective_cover_data(dual(m))
    env = dual_morphism(cover)  # m -> D(P0)
    return env.target, env


def is_projective_rep(m: Representation) -> bool:
    return m.is_zero() or syzygy(m).is_zero()


def is_injective_rep(m: Representation) -> bool:
    return m.is_zero() or cosyzygy(m).is_zero()


def projective_dimension_at_most(m: Representation, d: int) -> bool:
    return syzygy(m, d + 1).is_zero()


def is_hereditary(a: PresentedAlgebra) -> bool:
    """Every radical of an indecomposable projective is projective."""
    for v in a.quiver.vertices:
        rad, _incl = radical_rep(projective(a, v))
        if not is_projective_rep(rad):
            return False
    return True


# ---------------------------------------------------------------------------
# transpose and the translate


_tau_cache: dict = {}
_tau_inv_cache: dict = {}


def transpose(m: Representation) -> Representation:
    """Tr M over the opposite algebra, from a minimal presentation.

    With P1 = + e_{u_j}A, P0 = + e_{v_i}A and presentation entries
    x_ij in e_{v_i} A e_{u_j}, Tr M is the cokernel of the map
    + P^op_{v_i} -> + P^op_{u_j} given by left multiplication with the
    reversed entries.
    """
    a = m.algebra
    op = a.opposite()
    fld = a.field
    pres = minimal_presentation(m)
    p0, p1, d = pres.p0, pres.p1, pres.differential

    # presentation entries x_ij in e_{v_i} A e_{u_j}
    entries = {}
    for j in range(len(p1.vertex_list)):
        vtx, pos = p1.generator_position(j)
        col = d.blocks[vtx].column_vector(pos)
        for i, elt in p0.component_elements(vtx, col).items():
            entries[(i, j)] = elt

    dual_p0 = ProjSum(op, p0.vertex_list)
    dual_p1 = ProjSum(op, p1.vertex_list)

    blocks = []
    for w in range(op.quiver.n_vertices):
        rows_basis = dual_p1.fibre_words[w]
        cols_basis = dual_p0.fibre_words[w]
        mat = [[fld.zero()] * len(cols_basis) for _ in rows_basis]
        for cpos, (i, word) in enumerate(cols_basis):
            for (ii, j), elt in entries.items():
                if ii != i:
                    continue
                x_op = a.reverse_element(elt)
                prod = op.multiply(x_op, {word: fld.one()})
                for w2, c in prod.items():
                    rpos = dual_p1.fibre_index.get((j, w2))
                    if rpos is None:
                        raise ArithmeticError("transpose: word escaped the fibre basis")
                    mat[rpos][cpos] = fld.add(mat[rpos][cpos], c)
        blocks.append(Matrix(fld, mat, len(cols_basis)))
    dstar = Morphism(dual_p0.rep, dual_p1.rep, blocks, _checked=False)
    cok, _proj = _cokernel(dstar)
    return cok


def _cokernel(f: Morphism):
    img, incl = image(f)
    return quotient_rep(f.target, incl)


def tau(m: Representation) -> Representation:
    """Auslander-Reiten translate D Tr; kills projective summands."""
    hit = _tau_cache.get(m)
    if hit is None:
        hit = dual(transpose(m))
        _tau_cache[m] = hit
    return hit


def tau_inverse(m: Representation) -> Representation:
    """Inverse translate Tr D; kills injective summands."""
    hit = _tau_inv_cache.get(m)
    if hit is None:
        hit = transpose(dual(m))
        _tau_inv_cache[m] = hit
    return hit


def tau_power(m: Representation, k: int) -> Representation:
    out = m
    for _ in range(abs(k)):
        out = tau(out) if k > 0 else tau_inverse(out)
    return out


# ---------------------------------------------------------------------------
# Ext groups


@dataclass
class ExtData:
    """Ext^d(m, n) presented on Hom(Omega^d m, n).

    ``hom`` is the full hom basis, ``cobound`` the row span (in hom
    coordinates) of the classes that extend to P_{d-1}, and ``reps`` the
    chosen complement rows; cocycle k is the morphism with hom-coordinates
    ``reps[k]``.
    """

    source: Representation
    target: Representation
    degree: int
    omega: Representation
    omega_incl: Morphism  # Omega^d -> P_{d-1}
    penultimate: Representation  # P_{d-1}
    hom: list
    cobound: Matrix
    reps: list

    @property
    def dim(self):
        return len(self.reps)

    def cocycle(self, coords) -> Morphism:
        fld = self.source.algebra.field
        f = zero_morphism(self.omega, self.target)
        for c, row in zip(coords, self.reps):
            if c == fld.zero():
                continue
            for ch, h in zip(row, self.hom):
                if ch != fld.zero():
                    f = f + h.scale(fld.mul(c, ch))
        return f

    def class_coordinates(self, f: Morphism):
        """Coordinates of [f] in the chosen complement basis."""
        fld = self.source.algebra.field
        co = morphism_coordinates(self.hom, f)
        if co is None:
            raise ValueError("morphism does not lie in Hom(Omega^d, n)")
        if not self.reps:
            return ()
        rows = list(self.cobound.rows) + list(self.reps)
        basis = Matrix(fld, rows, len(self.hom))
        full = coordinates_in_basis(basis, co)
        if full is None:
            raise ArithmeticError("hom coordinates escaped cobound + complement")
        return tuple(full[self.cobound.nrows :])


def ext_data(m: Representation, n: Representation, degree: int = 1) -> ExtData:
    if degree < 1:
        raise ValueError("degree must be >= 1")
    a = m.algebra
    fld = a.field
    cur = m
    for _ in range(degree - 1):
        cur = syzygy(cur)
    if cur.is_zero():
        z = zero_rep(a)
        return ExtData(m, n, degree, z, zero_morphism(z, z), z, [], Matrix.zero(fld, 0, 0), [])
    pres = minimal_presentation(cur)
    omega, incl, pen = pres.omega, pres.omega_incl, pres.p0.rep
    hom = hom_basis(omega, n)
    if not hom:
        return ExtData(m, n, degree, omega, incl, pen, [], Matrix.zero(fld, 0, 0), [])
    width = len(hom[0].flatten())
    hom_mat = Matrix(fld, [h.flatten() for h in hom], width)
    cob_rows = []
    for psi in hom_basis(pen, n):
        co = coordinates_in_basis(hom_mat, compose(psi, incl).flatten())
        if co is None:
            raise ArithmeticError("restriction escaped Hom(Omega, n)")
        cob_rows.append(co)
    cobound = span_matrix(fld, cob_rows, len(hom))
    reps = complement_basis(cobound)
    return ExtData(m, n, degree, omega, incl, pen, hom, cobound, list(reps))


def ext_dim(m: Representation, n: Representation, degree: int = 1) -> int:
    return ext_data(m, n, degree).dim


@dataclass
class ShortExactSequence:
    sub: Representation
    middle: Representation
    quot: Representation
    left_map: Morphism  # sub -> middle
    right_map: Morphism  # middle -> quot

    def verify(self):
        f, g = self.left_map, self.right_map
        if self.middle.total_dim != self.sub.total_dim + self.quot.total_dim:
            raise ArithmeticError("middle dimension is off")
        for v in range(len(self.sub.dims)):
            if f.blocks[v].rank() != self.sub.dims[v]:
                raise ArithmeticError("left map not injective")
            if g.blocks[v].rank() != self.quot.dims[v]:
                raise ArithmeticError("right map not surjective")
        if not compose(g, f).is_zero():
            raise ArithmeticError("composite not zero")
        return True


def realize_extension(ext: ExtData, coords) -> ShortExactSequence:
    """The pushout short exact sequence n -> E -> m of an Ext^1 class.

    E = (n + P0) / {(-phi(w), w) : w in Omega} for the cocycle with the
    given class coordinates.
    """
    if ext.degree != 1:
        raise ValueError("realization only for degree 1")
    m, n = ext.source, ext.target
    a = m.algebra
    phi = ext.cocycle(coords)
    pres = minimal_presentation(m)
    big, incls, _projs = direct_sum(a, [n, pres.p0.rep])
    graft = Morphism(
        ext.omega,
        big,
        [
            (phi.blocks[v].scale(a.field.coerce(-1))).vstack(ext.omega_incl.blocks[v])
            for v in range(a.quiver.n_vertices)
        ],
        _checked=False,
    )
    img, img_incl = image(graft)
    e, proj = quotient_rep(big, img_incl)
    left_map = compose(proj, incls[0])
    # right map: descend (0 | cover): big -> m through the quotient
    sec_blocks = []
    for v in range(a.quiver.n_vertices):
        # a section of proj: solve proj * s = id
        s = proj.blocks[v].solve(Matrix.identity(a.field, e.dims[v]))
        if s is None:
            raise ArithmeticError("quotient projection has no section")
        sec_blocks.append(s)
    fblocks = []
    for v in range(a.quiver.n_vertices):
        zero_part = Matrix.zero(a.field, m.dims[v], n.dims[v])
        fb = zero_part.hstack(pres.cover.blocks[v])
        fblocks.append(fb @ sec_blocks[v])
    right_map = Morphism(e, m, fblocks, _checked=False)
    ses = ShortExactSequence(n, e, m, left_map, right_map)
    ses.verify()
    return ses


# ---------------------------------------------------------------------------
# almost split sequences


def lift_endomorphism_to_cover(g: Morphism, pres: Presentation) -> Morphism:
    """Some hat g: P0 -> P0 with cover o hat g = g o cover."""
    p0 = pres.p0.rep
    fld = p0.algebra.field
    basis = hom_basis(p0, p0)
    target = compose(g, pres.cover)
    rows = [compose(pres.cover, h).flatten() for h in basis]
    width = len(target.flatten())
    mat = Matrix(fld, rows, width)
    sol = mat.transpose().solve(Matrix.column(fld, target.flatten()))
    if sol is None:
        raise ArithmeticError("endomorphism does not lift to the cover")
    out = zero_morphism(p0, p0)
    for k, h in enumerate(basis):
        c = sol.rows[k][0]
        if c != fld.zero():
            out = out + h.scale(c)
    return out


def restrict_to_syzygy(hat: Morphism, pres: Presentation) -> Morphism:
    """Omega(g): the restriction of a cover lift to ker(cover)."""
    fld = pres.module.algebra.field
    blocks = []
    for v in range(len(pres.module.dims)):
        rhs = hat.blocks[v] @ pres.omega_incl.blocks[v]
        sol = pres.omega_incl.blocks[v].solve(rhs)
        if sol is None:
            raise ArithmeticError("lift does not preserve the syzygy")
        blocks.append(sol)
    return Morphism(pres.omega, pres.omega, blocks, _checked=False)


@dataclass
class AlmostSplitSequence:
    ses: ShortExactSequence
    left: Representation  # tau(right)
    right: Representation
    middle_summands: list  # [(rep, mult)]


_ass_cache: dict = {}


def almost_split_sequence(m: Representation) -> AlmostSplitSequence:
    """The almost split sequence 0 -> tau m -> E -> m -> 0.

    Requires m indecomposable non-projective.  The class is the socle
    generator of Ext^1(m, tau m) under the right End(m)-action
    [phi].g = [phi o Omega(g)].
    """
    hit = _ass_cache.get(m)
    if hit is not None:
        return hit
    if m.is_zero() or is_projective_rep(m):
        raise ValueError("almost split sequences end at non-projective modules")
    t = tau(m)
    ext = ext_data(m, t, 1)
    if ext.dim == 0:
        raise ArithmeticError("Ext^1(m, tau m) vanishes; m cannot be indecomposable")
    fld = m.algebra.field
    pres = minimal_presentation(m)
    rad_end = end_radical_morphisms(m)
    if rad_end:
        action_rows = []
        for g in rad_end:
            omega_g = restrict_to_syzygy(lift_endomorphism_to_cover(g, pres), pres)
            cols = []
            for k in range(ext.dim):
                unit = tuple(
                    fld.one() if i == k else fld.zero() for i in range(ext.dim)
                )
                phi = ext.cocycle(unit)
                cols.append(ext.class_coordinates(compose(phi, omega_g)))
            action_rows.append(Matrix(fld, list(zip(*cols)), ext.dim))
        stacked = action_rows[0]
        for mtx in action_rows[1:]:
            stacked = stacked.vstack(mtx)
        kern = stacked.kernel_basis()
    else:
        # End(m) = k: the socle is all of Ext^1(m, tau m)
        kern = [
            Matrix.column(fld, [fld.one() if i == k else fld.zero() for i in range(ext.dim)])
            for k in range(ext.dim)
        ]
    if len(kern) != 1:
        raise SocleNotOneDimensional(
            f"socle of Ext^1(m, tau m) has dimension {len(kern)} (expected 1); "
            "is m indecomposable?"
        )
    coords = tuple(kern[0].rows[i][0] for i in range(ext.dim))
    ses = realize_extension(ext, coords)
    summands = decompose(ses.middle)
    result = AlmostSplitSequence(ses, ses.sub, m, summands)
    _ass_cache[m] = result
    return result


def almost_split_sequence_starting(m: Representation) -> AlmostSplitSequence:
    """The almost split sequence 0 -> m -> E -> tau^{-1} m -> 0, via duality."""
    if m.is_zero() or is_injective_rep(m):
        raise ValueError("almost split sequences start at non-injective modules")
    ass_op = almost_split_sequence(dual(m))
    left = dual(ass_op.ses.quot)  # = m
    mid = dual(ass_op.ses.middle)
    right = dual(ass_op.ses.sub)  # = tau^{-1} m
    ses = ShortExactSequence(
        left, mid, right,
        dual_morphism(ass_op.ses.right_map),
        dual_morphism(ass_op.ses.left_map),
    )
    ses.verify()
    return AlmostSplitSequence(ses, left, right, [(dual(r), k) for r, k in ass_op.middle_summands])


def stable_hom_dim_mod_injectives(n: Representation, t: Representation) -> int:
    """dim of Hom(n, t) modulo maps factoring through injectives."""
    a = n.algebra
    fld = a.field
    homs = hom_basis(n, t)
    if not homs:
        return 0
    width = len(homs[0].flatten())
    factoring = []
    for v in a.quiver.vertices:
        i_v = injective_std(a, v)
        for g in hom_basis(n, i_v):
            for h in hom_basis(i_v, t):
                factoring.append(compose(h, g).flatten())
    fact_span = span_matrix(fld, factoring, width)
    hom_span = span_matrix(fld, [h.flatten() for h in homs], width)
    inter = _intersect(hom_span, fact_span)
    return hom_span.nrows - inter.nrows


def _intersect(a_span, b_span):
    from .exactlin import intersect_row_spaces

    return intersect_row_spaces(a_span, b_span)


_std_cache: dict = {}


def injective_std(a: PresentedAlgebra, v) -> Representation:
    key = (id(a), "I", str(v))
    if key not in _std_cache:
        from .modrep import injective

        _std_cache[key] = injective(a, v)
    return _std_cache[key]


def projective_std(a: PresentedAlgebra, v) -> Representation:
    key = (id(a), "P", str(v))
    if key not in _std_cache:
        _std_cache[key] = projective(a, v)
    return _std_cache[key]


# ---------------------------------------------------------------------------
# the AR quiver


@dataclass
class ARNode:
    ident: int
    rep: Representation
    projective_label: str | None = None
    injective_label: str | None = None


class ARQuiver:
    """The Auslander-Reiten quiver of a representation-finite algebra.

    Nodes are iso-classes of indecomposables (stable ids in discovery order:
    projectives, injectives, simples, then mesh closure).  ``arrows`` maps
    (source id, target id) to the multiplicity of irreducible maps;
    ``tau_link`` maps a non-projective node to its translate's node.
    """

    def __init__(self, algebra):
        self.algebra = algebra
        self.nodes: list[ARNode] = []
        self.arrows: dict = {}
        self.tau_link: dict = {}
        self.meshes: dict = {}
        self._by_dims: dict = {}

    def find(self, rep):
        for ident in self._by_dims.get(rep.dims, []):
            if _iso_between_indecomposables(self.nodes[ident].rep, rep):
                return ident
        return None

    def add(self, rep):
        ident = self.find(rep)
        if ident is not None:
            return ident, False
        ident = len(self.nodes)
        self.nodes.append(ARNode(ident, rep))
        self._by_dims.setdefault(rep.dims, []).append(ident)
        return ident, True

    def set_arrow(self, src, tgt, mult):
        old = self.arrows.get((src, tgt))
        if old is not None and old != mult:
            raise ArithmeticError(
                f"inconsistent multiplicity for arrow {src}->{tgt}: {old} vs {mult}"
            )
        self.arrows[(src, tgt)] = mult

    def tau_of(self, ident):
        return self.tau_link.get(ident)

    def tau_inv_of(self, ident):
        for a, b in self.tau_link.items():
            if b == ident:
                return a
        return None

    def predecessors(self, ident):
        return sorted((s, m) for (s, t), m in self.arrows.items() if t == ident)

    def successors(self, ident):
        return sorted((t, m) for (s, t), m in self.arrows.items() if s == ident)

    @property
    def count(self):
        return len(self.nodes)

    def representatives(self):
        return [n.rep for n in self.nodes]


def ar_quiver(a: PresentedAlgebra, max_nodes: int = 512, max_dim: int = 64) -> ARQuiver:
    """Mesh closure of projectives, injectives and simples.

    Raises :class:`CapExceeded` when more than ``max_nodes`` iso-classes or a
    module of total dimension beyond ``max_dim`` appears (the algebra is then
    possibly representation-infinite).
    """
    cache_key = ("ar_quiver", max_nodes, max_dim)
    if cache_key in a._cache:
        return a._cache[cache_key]
    g = ARQuiver(a)
    work = []
    for v in a.quiver.vertices:
        ident, new = g.add(projective_std(a, v))
        g.nodes[ident].projective_label = v
        if new:
            work.append(ident)
    for v in a.quiver.vertices:
        ident, new = g.add(injective_std(a, v))
        g.nodes[ident].injective_label = v
        if new:
            work.append(ident)
    for v in a.quiver.vertices:
        ident, new = g.add(simple(a, v))
        if new:
            work.append(ident)

    def admit(rep):
        if rep.total_dim > max_dim:
            raise CapExceeded(
                f"indecomposable of dimension {rep.total_dim} exceeds cap {max_dim}; "
                "possibly representation-infinite"
            )
        ident, new = g.add(rep)
        if g.count > max_nodes:
            raise CapExceeded(
                f"more than {max_nodes} iso-classes; possibly representation-infinite"
            )
        if new:
            work.append(ident)
        return ident

    processed = set()
    while work:
        ident = work.pop(0)
        if ident in processed:
            continue
        processed.add(ident)
        node = g.nodes[ident]
        rep = node.rep
        if is_projective_rep(rep):
            for v in a.quiver.vertices:
                if node.projective_label is None and is_isomorphic(rep, projective_std(a, v)):
                    node.projective_label = v
            rad, _incl = radical_rep(rep)
            for summand, mult in decompose(rad):
                g.set_arrow(admit(summand), ident, mult)
        else:
            ass = almost_split_sequence(rep)
            left = admit(ass.left)
            g.tau_link[ident] = left
            g.meshes[ident] = ass
            for summand, mult in ass.middle_summands:
                mid = admit(summand)
                g.set_arrow(mid, ident, mult)
                g.set_arrow(left, mid, mult)
        if is_injective_rep(rep):
            for v in a.quiver.vertices:
                if node.injective_label is None and is_isomorphic(rep, injective_std(a, v)):
                    node.injective_label = v
            soc, soc_incl = socle_rep(rep)
            quot, _proj = quotient_rep(rep, soc_incl)
            for summand, mult in decompose(quot):
                g.set_arrow(ident, admit(summand), mult)
        else:
            ass = almost_split_sequence_starting(rep)
            right = admit(ass.right)
            g.tau_link[right] = ident
            for summand, mult in ass.middle_summands:
                mid = admit(summand)
                g.set_arrow(ident, mid, mult)
                g.set_arrow(mid, right, mult)
    a._cache[cache_key] = g
    return g


# ---------------------------------------------------------------------------
# radicals of the module category


def radical_hom_basis(x: Representation, y: Representation):
    """Basis of rad(x, y) for indecomposables x, y.

    rad(x, y) is all of Hom when x and y are non-isomorphic, and rad End(x)
    otherwise.
    """
    if _iso_between_indecomposables(x, y):
        if x == y:
            return end_radical_morphisms(x)
        # transport rad End(y) along some iso x -> y
        iso = _an_isomorphism(x, y)
        return [compose(r, iso) for r in end_radical_morphisms(y)]
    return hom_basis(x, y)


def _an_isomorphism(x: Representation, y: Representation) -> Morphism:
    fld = x.algebra.field
    for f in hom_basis(x, y):
        if all(b.inverse() is not None for b in f.blocks):
            return f
    # try small combinations
    basis = hom_basis(x, y)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            f = basis[i] + basis[j]
            if all(b.inverse() is not None for b in f.blocks):
                return f
    raise ArithmeticError("no isomorphism found between isomorphic modules")


def radical_power_span(x, y, power, universe):
    """Row span (flattened) of rad^power(x, y) over a finite universe.

    ``universe`` is a list of pairwise non-isomorphic indecomposables;
    ``power`` may be a positive integer or the string 'infinity' (the
    stabilised power within the universe).  For power > 1 only composites
    passing through the universe are seen, so on a representation-finite
    algebra the universe should be all indecomposables.
    """
    fld = x.algebra.field
    width = sum(dx * dy for dx, dy in zip(x.dims, y.dims))
    if power == 1:
        return span_matrix(
            fld, [f.flatten() for f in radical_hom_basis(x, y)], width
        )
    return _radical_tower(x, y, power, universe)


def _radical_tower(x, y, power, universe):
    """Spans of rad^k(u, v) for all pairs over the universe, propagated."""
    fld = x.algebra.field
    objs = list(universe)
    if all(not _iso_between_indecomposables(x, u) for u in objs):
        objs.append(x)
    if all(not _iso_between_indecomposables(y, u) for u in objs):
        objs.append(y)

    def width_of(u, v):
        return sum(du * dv for du, dv in zip(u.dims, v.dims))

    rad1_m = {}
    for u in objs:
        for v in objs:
            rad1_m[(u, v)] = radical_hom_basis(u, v)

    cur = {
        (u, v): span_matrix(fld, [f.flatten() for f in rad1_m[(u, v)]], width_of(u, v))
        for u in objs
        for v in objs
    }
    k = 1
    while True:
        if power != "infinity" and k == power:
            break
        nxt = {}
        changed = False
        for u in objs:
            for v in objs:
                vecs = []
                for z in objs:
                    # morphisms u -> z in cur, then z -> v in rad1
                    for row in cur[(u, z)].rows:
                        f = _morphism_from_flat(u, z, row)
                        for g in rad1_m[(z, v)]:
                            vecs.append(compose(g, f).flatten())
                nxt[(u, v)] = span_matrix(fld, vecs, width_of(u, v))
                if nxt[(u, v)].nrows != cur[(u, v)].nrows:
                    changed = True
        cur = nxt
        k += 1
        if power == "infinity" and not changed:
            break
        if k > 2 * len(objs) * max((o.total_dim for o in objs), default=1) + 4:
            if power == "infinity":
                break
            raise CapExceeded("radical tower did not stabilise")
    return cur[(x, y)]


def _morphism_from_flat(u, v, flat):
    fld = u.algebra.field
    blocks = []
    pos = 0
    for dv_u, dv_v in zip(u.dims, v.dims):
        block = [
            [flat[pos + i * dv_u + j] for j in range(dv_u)] for i in range(dv_v)
        ]
        pos += dv_u * dv_v
        blocks.append(Matrix(fld, block, dv_u))
    return Morphism(u, v, blocks, _checked=True)


def radical_power_dim(x, y, power, universe) -> int:
    if power == 1:
        f = radical_hom_basis(x, y)
        return len(f)
    return _radical_tower(x, y, power, universe).nrows


# ---------------------------------------------------------------------------
# endomorphism algebras and the associated functors


@dataclass
class EndAlgebraResult:
    """End(M) of a basic module, presented as a bound quiver algebra.

    ``summands[i]`` corresponds to vertex i of the presentation (labels are
    1-based positions by default).  ``block_basis[(i, j)]`` is the hom basis
    of e_i B e_j = Hom(M_j, M_i).  ``arrow_morphisms[name]`` realises an
    arrow of the presentation as a module morphism M_j -> M_i.
    """

    module: Representation
    summands: list
    algebra: PresentedAlgebra
    block_basis: dict
    basis_layout: list  # flat basis: (i, j, position) per structure coordinate
    arrow_morphisms: dict
    quiverized: "object"

    def hom_functor(self, x: Representation) -> Representation:
        """Hom_A(M, x) as a right module over End(M)."""
        b = self.algebra
        fld = b.field
        fibre_bases = [hom_basis(s, x) for s in self.summands]
        dims = [len(fb) for fb in fibre_bases]
        maps = []
        for j_arrow, ar in enumerate(b.quiver.arrows):
            i = b.quiver.vertex_index[ar.source]
            j = b.quiver.vertex_index[ar.target]
            f_b = self.arrow_morphisms[ar.name]  # M_j -> M_i
            cols = []
            for phi in fibre_bases[i]:
                comp = compose(phi, f_b)  # M_j -> x
                co = morphism_coordinates(fibre_bases[j], comp)
                if co is None:
                    raise ArithmeticError("hom functor: composite escaped the basis")
                cols.append(co)
            if cols:
                maps.append(Matrix(fld, list(zip(*cols)), dims[i]))
            else:
                maps.append(Matrix.zero(fld, dims[j], dims[i]))
        return Representation(b, dims, maps)

    def hom_functor_on_map(self, f: Morphism):
        """Hom_A(M, f): natural map between the hom-functor images."""
        b = self.algebra
        fld = b.field
        src = self.hom_functor(f.source)
        tgt = self.hom_functor(f.target)
        src_bases = [hom_basis(s, f.source) for s in self.summands]
        tgt_bases = [hom_basis(s, f.target) for s in self.summands]
        blocks = []
        for i in range(len(self.summands)):
            cols = []
            for phi in src_bases[i]:
                co = morphism_coordinates(tgt_bases[i], compose(f, phi))
                if co is None:
                    raise ArithmeticError("hom functor: image escaped the basis")
                cols.append(co)
            if cols:
                blocks.append(Matrix(fld, list(zip(*cols)), len(src_bases[i])))
            else:
                blocks.append(Matrix.zero(fld, len(tgt_bases[i]), 0))
        return Morphism(src, tgt, blocks, _checked=False), src, tgt

    # -- tensor side --------------------------------------------------

    def _tensor_layout(self, y: Representation):
        """Per A-vertex: coordinates of + y_i (x) (M_i)_v and the relation
        subspace from y.b (x) m = y (x) b.m."""
        a = self.module.algebra
        b = self.algebra
        fld = a.field
        n = len(self.summands)
        offsets = []
        total = []
        for v in range(a.quiver.n_vertices):
            offs = []
            run = 0
            for i in range(n):
                offs.append(run)
                run += y.dims[i] * self.summands[i].dims[v]
            offsets.append(offs)
            total.append(run)
        rel = {v: [] for v in range(a.quiver.n_vertices)}
        for ar in b.quiver.arrows:
            i = b.quiver.vertex_index[ar.source]
            j = b.quiver.vertex_index[ar.target]
            yb = y.maps[b.quiver.arrow_index[ar.name]]  # y_i -> y_j
            f_b = self.arrow_morphisms[ar.name]  # M_j -> M_i
            for v in range(a.quiver.n_vertices):
                mj = self.summands[j].dims[v]
                mi = self.summands[i].dims[v]
                for e_y in range(y.dims[i]):
                    for e_m in range(mj):
                        vec = [fld.zero()] * total[v]
                        # (y.b (x) m) in block j
                        for r in range(y.dims[j]):
                            c = yb.rows[r][e_y]
                            if c != fld.zero():
                                vec[offsets[v][j] + r * mj + e_m] = fld.add(
                                    vec[offsets[v][j] + r * mj + e_m], c
                                )
                        # -(y (x) b.m) in block i
                        for r in range(mi):
                            c = f_b.blocks[v].rows[r][e_m]
                            if c != fld.zero():
                                pos = offsets[v][i] + e_y * mi + r
                                vec[pos] = fld.sub(vec[pos], c)
                        if any(c != fld.zero() for c in vec):
                            rel[v].append(vec)
        return offsets, total, rel

    def tensor_functor(self, y: Representation):
        """y (x)_B M as a right A-module, with the projection data."""
        a = self.module.algebra
        fld = a.field
        if y.algebra is not self.algebra:
            raise ValueError("tensor argument is not a module over End(M)")
        offsets, total, rel = self._tensor_layout(y)
        projs, secs, dims = [], [], []
        for v in range(a.quiver.n_vertices):
            rel_span = span_matrix(fld, rel[v], total[v])
            comp = complement_basis(rel_span)
            dims.append(len(comp))
            if total[v] == 0:
                projs.append(Matrix.zero(fld, 0, 0))
                secs.append(Matrix.zero(fld, 0, 0))
                continue
            rows = list(rel_span.rows) + list(comp)
            bmat = Matrix(fld, rows, total[v])
            binv = bmat.transpose().inverse()
            projs.append(binv.submatrix(range(rel_span.nrows, total[v]), range(total[v])))
            secs.append(
                Matrix(fld, comp, total[v]).transpose()
                if comp
                else Matrix.zero(fld, total[v], 0)
            )
        n = len(self.summands)
        maps = []
        for j_arrow in range(len(a.quiver.arrows)):
            x_v = a.quiver.arrow_source[j_arrow]
            y_v = a.quiver.arrow_target[j_arrow]
            big = Matrix.zero(fld, total[y_v], total[x_v])
            rows = [list(r) for r in big.rows]
            for i in range(n):
                mmat = self.summands[i].maps[j_arrow]
                for e_y in range(y.dims[i]):
                    for r in range(mmat.nrows):
                        for ccol in range(mmat.ncols):
                            c = mmat.rows[r][ccol]
                            if c != fld.zero():
                                rows[offsets[y_v][i] + e_y * mmat.nrows + r][
                                    offsets[x_v][i] + e_y * mmat.ncols + ccol
                                ] = c
            bigm = Matrix(fld, rows, total[x_v])
            maps.append(projs[y_v] @ bigm @ secs[x_v])
        rep = Representation(a, dims, maps)
        return rep, projs, secs, offsets, total

    def tensor_on_map(self, g: Morphism):
        """g (x) id between the tensor images."""
        a = self.module.algebra
        fld = a.field
        src, _ps, s_secs, s_off, s_tot = self.tensor_functor(g.source)
        tgt, t_projs, _ts, t_off, t_tot = self.tensor_functor(g.target)
        n = len(self.summands)
        blocks = []
        for v in range(a.quiver.n_vertices):
            rows = [[fld.zero()] * s_tot[v] for _ in range(t_tot[v])]
            for i in range(n):
                mv = self.summands[i].dims[v]
                for r in range(g.target.dims[i]):
                    for ccol in range(g.source.dims[i]):
                        c = g.blocks[i].rows[r][ccol]
                        if c != fld.zero():
                            for e_m in range(mv):
                                rows[t_off[v][i] + r * mv + e_m][
                                    s_off[v][i] + ccol * mv + e_m
                                ] = c
            big = Matrix(fld, rows, s_tot[v]) if t_tot[v] or s_tot[v] else Matrix.zero(fld, 0, 0)
            blocks.append(t_projs[v] @ big @ s_secs[v])
        return Morphism(src, tgt, blocks, _checked=False), src, tgt

    def tensor_is_zero(self, y: Representation) -> bool:
        rep, *_ = self.tensor_functor(y)
        return rep.is_zero()

    def tor1(self, y: Representation) -> Representation:
        """Tor_1^B(y, M) as a right A-module."""
        pres = minimal_presentation(y)
        t_incl, _src, _tgt = self.tensor_on_map(pres.omega_incl)
        k, _incl = kernel(t_incl)
        return k

    def tor1_is_zero(self, y: Representation) -> bool:
        return self.tor1(y).is_zero()


def end_algebra(m: Representation, labels=None) -> EndAlgebraResult:
    """Present End_A(M) of a basic module as a bound quiver algebra.

    Vertex i of the presentation corresponds to the i-th indecomposable
    summand (decomposition discovery order); the basis of e_i B e_j is
    Hom(M_j, M_i) and multiplication is composition.
    """
    decomp = decompose(m)
    if any(mult > 1 for _s, mult in decomp):
        raise NotBasic("module is not basic (repeated indecomposable summand)")
    summands = [s for s, _mult in decomp]
    fld = m.algebra.field
    n = len(summands)

    block_basis = {}
    layout = []
    for i in range(n):
        for j in range(n):
            basis = hom_basis(summands[j], summands[i])
            block_basis[(i, j)] = basis
            for pos in range(len(basis)):
                layout.append((i, j, pos))
    dim = len(layout)
    index_of = {t: k for k, t in enumerate(layout)}

    def coords_of(i, ell, f):
        """Coordinates of f in block (i, ell), embedded in the full basis."""
        co = morphism_coordinates(block_basis[(i, ell)], f)
        if co is None:
            raise ArithmeticError("End is not closed under composition")
        vec = [fld.zero()] * dim
        for pos, c in enumerate(co):
            vec[index_of[(i, ell, pos)]] = c
        return tuple(vec)

    z = tuple(fld.zero() for _ in range(dim))
    table = []
    for (i, j, p) in layout:
        row = []
        f = block_basis[(i, j)][p]
        for (k, ell, qq) in layout:
            if j != k:
                row.append(z)
                continue
            gmor = block_basis[(k, ell)][qq]
            row.append(coords_of(i, ell, compose(f, gmor)))
        table.append(tuple(row))
    unit = [fld.zero()] * dim
    for i in range(n):
        co = morphism_coordinates(block_basis[(i, i)], identity_morphism(summands[i]))
        for pos, c in enumerate(co):
            unit[index_of[(i, i, pos)]] = c
    sc = StructureConstants(fld, dim, tuple(table), tuple(unit))

    idems = []
    for i in range(n):
        vec = [fld.zero()] * dim
        co = morphism_coordinates(block_basis[(i, i)], identity_morphism(summands[i]))
        for pos, c in enumerate(co):
            vec[index_of[(i, i, pos)]] = c
        idems.append(tuple(vec))
    if labels is None:
        labels = [str(i + 1) for i in range(n)]
    qr = quiverize(sc, labels=labels, idempotents=idems, arrow_prefix="b")

    arrow_morphisms = {}
    for ar in qr.algebra.quiver.arrows:
        ai = qr.algebra.quiver.arrow_index[ar.name]
        word = (qr.algebra.quiver.arrow_source[ai], (ai,))
        coords = qr.path_images[word]
        i = qr.algebra.quiver.vertex_index[ar.source]
        j = qr.algebra.quiver.vertex_index[ar.target]
        f = zero_morphism(summands[j], summands[i])
        for k, c in enumerate(coords):
            if c != fld.zero():
                (bi, bj, pos) = layout[k]
                if (bi, bj) != (i, j):
                    raise ArithmeticError("arrow representative is not block-pure")
                f = f + block_basis[(bi, bj)][pos].scale(c)
        arrow_morphisms[ar.name] = f
    return EndAlgebraResult(m, summands, qr.algebra, block_basis, layout, arrow_morphisms, qr)


# ---------------------------------------------------------------------------
# the relation-extension bimodule Ext^2(DC, C)


def _regular_rep_data(c: PresentedAlgebra):
    """C as a right module over itself, with path-indexed fibres."""
    return ProjSum(c, list(c.quiver.vertices))


def _left_multiplication_morphism(ps: ProjSum, elt) -> Morphism:
    """x -> elt * x on the regular module, as a right-module morphism."""
    a = ps.algebra
    fld = a.field
    blocks = []
    for w in range(a.quiver.n_vertices):
        basis = ps.fibre_words[w]
        mat = [[fld.zero()] * len(basis) for _ in basis]
        for cpos, (k, word) in enumerate(basis):
            # element in summand k is the path `word`: multiply elt * word;
            # the left factor moves the result into the summand of its source
            prod = a.multiply(elt, {word: fld.one()})
            for w2, coeff in prod.items():
                k2 = ps.vertex_list.index(a.quiver.vertices[w2[0]])
                rpos = ps.fibre_index[(k2, w2)]
                mat[rpos][cpos] = fld.add(mat[rpos][cpos], coeff)
        blocks.append(Matrix(fld, mat, len(basis)))
    return Morphism(ps.rep, ps.rep, blocks, _checked=False)


def _dc_left_multiplication(c: PresentedAlgebra, ps_op: ProjSum, dc, elt) -> Morphism:
    """psi -> elt * psi on DC, i.e. the transpose of right multiplication.

    (elt * psi)(x) = psi(x * elt); on the reversed-word model of the fibres
    of DC the primal map sends an op-word xi to the transfer of
    rev(xi) * elt.
    """
    op = c.opposite()
    fld = c.field
    blocks = []
    for w in range(c.quiver.n_vertices):
        basis = ps_op.fibre_words[w]
        mat = [[fld.zero()] * len(basis) for _ in basis]
        for cpos, (k, word) in enumerate(basis):
            x_c = op.reverse_element({word: fld.one()})  # element of C
            prod = c.multiply(x_c, elt)
            back = c.reverse_element(prod)  # element of C^op
            for w2, coeff in back.items():
                # an op-word starting at vertex w2[0] lives in that summand
                rpos = ps_op.fibre_index[(w2[0], w2)]
                mat[rpos][cpos] = fld.add(mat[rpos][cpos], coeff)
        blocks.append(Matrix(fld, mat, len(basis)).transpose())
    return Morphism(dc, dc, blocks, _checked=False)


def lift_through_two_covers(f: Morphism, pres1: Presentation, pres2: Presentation) -> Morphism:
    """Omega^2(f) for an endomorphism f of pres1.module.

    pres1 presents the module and pres2 presents its syzygy.
    """
    hat = lift_endomorphism_to_cover(f, pres1)
    omega_f = restrict_to_syzygy(hat, pres1)
    hat2 = lift_endomorphism_to_cover(omega_f, pres2)
    return restrict_to_syzygy(hat2, pres2)


def relation_extension_bimodule(c: PresentedAlgebra) -> Bimodule:
    """E = Ext^2_C(DC, C) with its C-C-bimodule structure.

    The left action post-composes with left multiplication on C; the right
    action pre-composes with (the second syzygy lift of) left multiplication
    on DC.  For a hereditary algebra E = 0; the trivial extension by E is the
    relation extension of C.
    """
    fld = c.field
    ps = _regular_rep_data(c)
    ps_op = ProjSum(c.opposite(), list(c.quiver.vertices))
    dc = dual(ps_op.rep)
    ext = ext_data(dc, ps.rep, 2)
    dim = ext.dim
    if dim == 0:
        zero = Matrix.zero(fld, 0, 0)
        left = {("e", v): zero for v in c.quiver.vertices}
        left.update({("arrow", ar.name): zero for ar in c.quiver.arrows})
        right = {("e", v): zero for v in c.quiver.vertices}
        right.update({("arrow", ar.name): zero for ar in c.quiver.arrows})
        return Bimodule(c, 0, left, right, {})

    pres1 = minimal_presentation(dc)
    pres2 = minimal_presentation(pres1.omega)

    unit_cocycles = []
    for k in range(dim):
        unit = tuple(fld.one() if i == k else fld.zero() for i in range(dim))
        unit_cocycles.append(ext.cocycle(unit))

    def left_matrix(elt):
        lam = _left_multiplication_morphism(ps, elt)
        cols = [
            ext.class_coordinates(compose(lam, phi)) for phi in unit_cocycles
        ]
        return Matrix(fld, list(zip(*cols)), dim)

    def right_matrix(elt):
        eta = _dc_left_multiplication(c, ps_op, dc, elt)
        omega2 = lift_through_two_covers(eta, pres1, pres2)
        cols = [
            ext.class_coordinates(compose(phi, omega2)) for phi in unit_cocycles
        ]
        return Matrix(fld, list(zip(*cols)), dim)

    left = {}
    right = {}
    for v in c.quiver.vertices:
        left[("e", v)] = left_matrix(c.idempotent(v))
        right[("e", v)] = right_matrix(c.idempotent(v))
    for ar in c.quiver.arrows:
        left[("arrow", ar.name)] = left_matrix(c.arrow_element(ar.name))
        right[("arrow", ar.name)] = right_matrix(c.arrow_element(ar.name))
    bim = Bimodule(c, dim, left, right, {})
    bim.check()
    return bim


def bimodule_right_rep(bim: Bimodule) -> Representation:
    """The underlying right module of a bimodule, as a representation."""
    c = bim.algebra
    fld = c.field
    fibres = []
    for v in c.quiver.vertices:
        proj = bim.right[("e", v)]
        cols = [proj.column_vector(j) for j in range(proj.ncols)]
        fibres.append(span_matrix(fld, cols, bim.dim))
    dims = [f.nrows for f in fibres]
    maps = []
    for j, ar in enumerate(c.quiver.arrows):
        x = c.quiver.vertex_index[ar.source]
        y = c.quiver.vertex_index[ar.target]
        act = bim.right[("arrow", ar.name)]
        cols = []
        for row in fibres[x].rows:
            img = act @ Matrix.column(fld, row)
            co = coordinates_in_basis(fibres[y], tuple(img.column_vector(0)))
            if co is None:
                raise ArithmeticError("right action does not respect the grading")
            cols.append(co)
        if cols:
            maps.append(Matrix(fld, list(zip(*cols)), dims[x]))
        else:
            maps.append(Matrix.zero(fld, dims[y], 0))
    return Representation(c, dims, maps)


def bimodule_dual_left_rep(bim: Bimodule) -> Representation:
    """D(_C Q): the dual of the left structure, as a right C-module."""
    c = bim.algebra
    fld = c.field
    # left structure of Q = right module over C^op with fibre projections
    # from the left idempotents; dualising transposes the action.
    op = c.opposite()
    fibres = []
    for v in op.quiver.vertices:
        proj = bim.left[("e", v)]
        cols = [proj.column_vector(j) for j in range(proj.ncols)]
        fibres.append(span_matrix(fld, cols, bim.dim))
    dims = [f.nrows for f in fibres]
    maps = []
    for ar in op.quiver.arrows:
        x = op.quiver.vertex_index[ar.source]
        y = op.quiver.vertex_index[ar.target]
        act = bim.left[("arrow", ar.name)]  # q -> arrow.q moves e_tgt q to e_src side
        cols = []
        for row in fibres[x].rows:
            img = act @ Matrix.column(fld, row)
            co = coordinates_in_basis(fibres[y], tuple(img.column_vector(0)))
            if co is None:
                raise ArithmeticError("left action does not respect the grading")
            cols.append(co)
        if cols:
            maps.append(Matrix(fld, list(zip(*cols)), dims[x]))
        else:
            maps.append(Matrix.zero(fld, dims[y], 0))
    as_op_rep = Representation(op, dims, maps)
    return dual(as_op_rep)
