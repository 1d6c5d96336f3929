"""Finite dimensional right modules as quiver representations.

A right module over kQ/I is a representation assigning a vector space to each
vertex and, to each arrow a: x -> y, a matrix M_a: M_x -> M_y *along* the
arrow (acting on column vectors).  The path a*b (first a, then b) then acts
as M_b M_a, matching right-module composition m.(ab) = (m.a).b.

Morphisms f: M -> N are vertex-indexed blocks with f_y M_a = N_a f_x for
every arrow a: x -> y.
"""

from __future__ import annotations

from .algebra import PresentedAlgebra, QuotientMap, word_key
from .exactlin import Matrix, complement_basis, coordinates_in_basis, span_matrix


class DecompositionStalled(RuntimeError):
    """No splitting endomorphism was found for a decomposable-looking module."""


class Representation:
    """Immutable representation of a :class:`PresentedAlgebra`.

    ``dims[i]`` is the dimension at vertex i (algebra's vertex order) and
    ``maps[j]`` the matrix of arrow j, of shape (dim target, dim source).
    Relations of the algebra are verified on construction.
    """

    __slots__ = ("algebra", "dims", "maps", "_hash")

    def __init__(self, algebra: PresentedAlgebra, dims, maps, _checked=False):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        q = algebra.quiver
        if len(self.dims) != q.n_vertices:
            raise ValueError("wrong number of vertex dimensions")
        maps = tuple(maps)
        if len(maps) != len(q.arrows):
            raise ValueError("wrong number of arrow maps")
        for j, mat in enumerate(maps):
            ds = self.dims[q.arrow_source[j]]
            dt = self.dims[q.arrow_target[j]]
            if mat.shape != (dt, ds):
                raise ValueError(
                    f"map for arrow {q.arrows[j].name} has shape {mat.shape}, "
                    f"expected {(dt, ds)}"
                )
            if mat.field != algebra.field:
                raise ValueError("matrix field does not match the algebra")
        self.maps = maps
        self._hash = None
        if not _checked:
            self._verify_relations()

    def _verify_relations(self):
        for rel in self.algebra.relations:
            items = list(rel.items())
            src = items[0][0][0]
            tgt = self.algebra.word_target(items[0][0])
            acc = Matrix.zero(self.algebra.field, self.dims[tgt], self.dims[src])
            for word, c in items:
                acc = acc + self.word_action(word).scale(c)
            if not acc.is_zero():
                raise ValueError(
                    f"relation {self.algebra.format_element(dict(rel))} "
                    "does not annihilate the representation"
                )

    def word_action(self, word) -> Matrix:
        """Matrix of a path word, from its source fibre to its target fibre."""
        src, arrows = word
        out = Matrix.identity(self.algebra.field, self.dims[src])
        for a in arrows:
            out = self.maps[a] @ out
        return out

    def element_action(self, elt) -> Matrix:
        """Matrix of a parallel-path element (all words same source/target)."""
        elt = self.algebra.normal_form(elt)
        if not elt:
            raise ValueError("element_action of 0 has no well-defined shape")
        words = sorted(elt, key=word_key)
        src = words[0][0]
        tgt = self.algebra.word_target(words[0])
        for w in words:
            if w[0] != src or self.algebra.word_target(w) != tgt:
                raise ValueError("element is not parallel-homogeneous")
        acc = Matrix.zero(self.algebra.field, self.dims[tgt], self.dims[src])
        for w in words:
            acc = acc + self.word_action(w).scale(elt[w])
        return acc

    @property
    def total_dim(self):
        return sum(self.dims)

    def dim_at(self, label):
        return self.dims[self.algebra.quiver.vertex_index[str(label)]]

    def is_zero(self):
        return self.total_dim == 0

    def dim_vector(self):
        return self.dims

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.algebra is other.algebra
            and self.dims == other.dims
            and self.maps == other.maps
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.algebra), self.dims, self.maps))
        return self._hash

    def __repr__(self):
        return f"Rep{self.dims}"


class Morphism:
    """A homomorphism of representations, given by vertex blocks."""

    __slots__ = ("source", "target", "blocks", "_hash")

    def __init__(self, source: Representation, target: Representation, blocks, _checked=False):
        if source.algebra is not target.algebra:
            raise ValueError("morphism between modules over different algebras")
        self.source = source
        self.target = target
        self.blocks = tuple(blocks)
        q = source.algebra.quiver
        if len(self.blocks) != q.n_vertices:
            raise ValueError("wrong number of blocks")
        for v, b in enumerate(self.blocks):
            if b.shape != (target.dims[v], source.dims[v]):
                raise ValueError(f"block at vertex {q.vertices[v]} has wrong shape")
        self._hash = None
        if not _checked:
            for j in range(len(q.arrows)):
                x, y = q.arrow_source[j], q.arrow_target[j]
                if self.blocks[y] @ source.maps[j] != target.maps[j] @ self.blocks[x]:
                    raise ValueError(
                        f"blocks do not intertwine arrow {q.arrows[j].name}"
                    )

    def is_zero(self):
        return all(b.is_zero() for b in self.blocks)

    def flatten(self):
        return tuple(x for b in self.blocks for x in b.flatten())

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.source == other.source
            and self.target == other.target
            and self.blocks == other.blocks
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.source, self.target, self.blocks))
        return self._hash

    def __add__(self, other):
        return Morphism(
            self.source,
            self.target,
            [a + b for a, b in zip(self.blocks, other.blocks)],
            _checked=True,
        )

    def scale(self, c):
        return Morphism(self.source, self.target, [b.scale(c) for b in self.blocks], _checked=True)

    def __repr__(self):
        return f"Morphism({self.source!r} -> {self.target!r})"


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    if f.target != g.source:
        raise ValueError("morphisms not composable")
    return Morphism(f.source, g.target, [b2 @ b1 for b1, b2 in zip(f.blocks, g.blocks)], _checked=True)


def identity_morphism(m: Representation) -> Morphism:
    return Morphism(m, m, [Matrix.identity(m.algebra.field, d) for d in m.dims], _checked=True)


def zero_morphism(m: Representation, n: Representation) -> Morphism:
    return Morphism(
        m, n, [Matrix.zero(m.algebra.field, dn, dm) for dm, dn in zip(m.dims, n.dims)],
        _checked=True,
    )


# ---------------------------------------------------------------------------
# standard modules


def zero_rep(a: PresentedAlgebra) -> Representation:
    q = a.quiver
    return Representation(
        a,
        [0] * q.n_vertices,
        [Matrix.zero(a.field, 0, 0) for _ in q.arrows],
        _checked=True,
    )


def simple(a: PresentedAlgebra, label) -> Representation:
    q = a.quiver
    v = q.vertex_index[str(label)]
    dims = [1 if i == v else 0 for i in range(q.n_vertices)]
    maps = [
        Matrix.zero(a.field, dims[q.arrow_target[j]], dims[q.arrow_source[j]])
        for j in range(len(q.arrows))
    ]
    return Representation(a, dims, maps)


def projective(a: PresentedAlgebra, label) -> Representation:
    """Indecomposable projective e_v A: fibres spanned by paths from v."""
    q = a.quiver
    v = q.vertex_index[str(label)]
    words = [w for w in a.basis if w[0] == v]
    by_vertex = {}
    for w in words:
        by_vertex.setdefault(a.word_target(w), []).append(w)
    index = {}
    for tgt, ws in by_vertex.items():
        for k, w in enumerate(ws):
            index[w] = k
    dims = [len(by_vertex.get(i, [])) for i in range(q.n_vertices)]
    fld = a.field
    maps = []
    for j in range(len(q.arrows)):
        x, y = q.arrow_source[j], q.arrow_target[j]
        mat = [[fld.zero()] * dims[x] for _ in range(dims[y])]
        for w in by_vertex.get(x, []):
            prod = a.normal_form({(w[0], w[1] + (j,)): fld.one()})
            col = index[w]
            for w2, c in prod.items():
                mat[index[w2]][col] = c
        maps.append(Matrix(fld, mat, dims[x]))
    return Representation(a, dims, maps)


def injective(a: PresentedAlgebra, label) -> Representation:
    """Indecomposable injective D(A e_v), via the opposite projective."""
    return dual(projective(a.opposite(), label))


def regular_module(a: PresentedAlgebra):
    """A as a right module over itself: direct sum of the projectives."""
    return direct_sum(a, [projective(a, v) for v in a.quiver.vertices])


def dual(m: Representation) -> Representation:
    """D M = Hom_k(M, k) over the opposite algebra (same vertex labels)."""
    a = m.algebra
    op = a.opposite()
    maps = [mat.transpose() for mat in m.maps]
    return Representation(op, m.dims, maps, _checked=True)


def direct_sum(a: PresentedAlgebra, summands):
    """(sum, inclusions, projections) of a list of representations."""
    summands = list(summands)
    fld = a.field
    q = a.quiver
    dims = [sum(s.dims[v] for s in summands) for v in range(q.n_vertices)]
    maps = []
    for j in range(len(q.arrows)):
        maps.append(Matrix.block_diagonal(fld, [s.maps[j] for s in summands]))
    total = Representation(a, dims, maps, _checked=True)
    incls, projs = [], []
    offset = [0] * q.n_vertices
    for s in summands:
        inc_blocks, proj_blocks = [], []
        for v in range(q.n_vertices):
            inc = Matrix.zero(fld, dims[v], s.dims[v])
            pro = Matrix.zero(fld, s.dims[v], dims[v])
            rows_i = [list(r) for r in inc.rows]
            rows_p = [list(r) for r in pro.rows]
            for k in range(s.dims[v]):
                rows_i[offset[v] + k][k] = fld.one()
                rows_p[k][offset[v] + k] = fld.one()
            inc_blocks.append(Matrix(fld, rows_i, s.dims[v]))
            proj_blocks.append(Matrix(fld, rows_p, dims[v]))
        incls.append(Morphism(s, total, inc_blocks, _checked=True))
        projs.append(Morphism(total, s, proj_blocks, _checked=True))
        for v in range(q.n_vertices):
            offset[v] += s.dims[v]
    return total, incls, projs


# ---------------------------------------------------------------------------
# hom spaces


_hom_cache: dict = {}


def hom_basis(m: Representation, n: Representation):
    """Echelonised basis of Hom(m, n) as a list of morphisms.

    Unknowns are the block entries (vertex order, row-major); the returned
    basis is the deterministic kernel basis of the intertwining system.
    """
    key = (m, n)
    hit = _hom_cache.get(key)
    if hit is not None:
        return hit
    a = m.algebra
    if a is not n.algebra:
        raise ValueError("hom between modules over different algebras")
    fld = a.field
    q = a.quiver
    offsets = []
    total = 0
    for v in range(q.n_vertices):
        offsets.append(total)
        total += n.dims[v] * m.dims[v]

    def var(v, i, j):
        return offsets[v] + i * m.dims[v] + j

    rows = []
    for arw in range(len(q.arrows)):
        x, y = q.arrow_source[arw], q.arrow_target[arw]
        ma, na = m.maps[arw], n.maps[arw]
        for i in range(n.dims[y]):
            for j in range(m.dims[x]):
                row = [fld.zero()] * total
                # (f_y M_a)_{ij} = sum_k f_y[i,k] Ma[k,j]
                for k in range(m.dims[y]):
                    row[var(y, i, k)] = fld.add(row[var(y, i, k)], ma.rows[k][j])
                # -(N_a f_x)_{ij} = -sum_k Na[i,k] f_x[k,j]
                for k in range(n.dims[x]):
                    row[var(x, k, j)] = fld.sub(row[var(x, k, j)], na.rows[i][k])
                if any(c != fld.zero() for c in row):
                    rows.append(row)
    if total == 0:
        basis = []
    elif not rows:
        kern = Matrix.identity(fld, total).rows
        basis = [_morphism_from_vector(m, n, v) for v in kern]
    else:
        mat = Matrix(fld, rows, total)
        basis = [
            _morphism_from_vector(m, n, k.column_vector(0)) for k in mat.kernel_basis()
        ]
    _hom_cache[key] = basis
    return basis


def _morphism_from_vector(m, n, vec):
    fld = m.algebra.field
    q = m.algebra.quiver
    blocks = []
    pos = 0
    for v in range(q.n_vertices):
        h, w = n.dims[v], m.dims[v]
        block = [[vec[pos + i * w + j] for j in range(w)] for i in range(h)]
        pos += h * w
        blocks.append(Matrix(fld, block, w))
    return Morphism(m, n, blocks, _checked=True)


def hom_dim(m, n) -> int:
    return len(hom_basis(m, n))


def morphism_coordinates(basis, f: Morphism):
    """Coordinates of f in a hom basis (None if not in the span)."""
    fld = f.source.algebra.field
    if not basis:
        return () if f.is_zero() else None
    rows = [g.flatten() for g in basis]
    mat = Matrix(fld, rows, len(rows[0]))
    return coordinates_in_basis(mat, f.flatten())


# ---------------------------------------------------------------------------
# subquotients


def submodule(m: Representation, spaces, close=True):
    """(S, incl) for the subrepresentation generated by given vectors.

    ``spaces`` maps vertex labels to lists of vectors in the fibre; with
    ``close=False`` the spaces must already be arrow-stable.
    """
    a = m.algebra
    fld = a.field
    q = a.quiver
    spans = []
    for v in range(q.n_vertices):
        vecs = spaces.get(q.vertices[v], [])
        spans.append(span_matrix(fld, [tuple(x) for x in vecs], m.dims[v]))
    changed = close
    while changed:
        changed = False
        for j in range(len(q.arrows)):
            x, y = q.arrow_source[j], q.arrow_target[j]
            if spans[x].nrows == 0:
                continue
            imgs = [m.maps[j] @ Matrix.column(fld, r) for r in spans[x].rows]
            vecs = list(spans[y].rows) + [tuple(c.column_vector(0)) for c in imgs]
            new = span_matrix(fld, vecs, m.dims[y])
            if new.nrows != spans[y].nrows:
                spans[y] = new
                changed = True
    incl_blocks = [spans[v].transpose() for v in range(q.n_vertices)]
    dims = [spans[v].nrows for v in range(q.n_vertices)]
    maps = []
    for j in range(len(q.arrows)):
        x, y = q.arrow_source[j], q.arrow_target[j]
        rhs = m.maps[j] @ incl_blocks[x]
        sol = incl_blocks[y].solve(rhs)
        if sol is None:
            raise ValueError("spaces are not arrow-stable (use close=True)")
        maps.append(sol)
    s = Representation(a, dims, maps, _checked=True)
    return s, Morphism(s, m, incl_blocks, _checked=True)


def quotient_rep(m: Representation, incl: Morphism):
    """(Q, proj) for M / image(incl); incl must be the inclusion of a subrep."""
    a = m.algebra
    fld = a.field
    q = a.quiver
    projs = []
    secs = []
    dims = []
    for v in range(q.n_vertices):
        sub_rows = span_matrix(
            fld, [incl.blocks[v].column_vector(j) for j in range(incl.blocks[v].ncols)],
            m.dims[v],
        )
        comp = complement_basis(sub_rows)
        dims.append(len(comp))
        if m.dims[v] == 0:
            projs.append(Matrix.zero(fld, 0, 0))
            secs.append(Matrix.zero(fld, 0, 0))
            continue
        rows = list(sub_rows.rows) + list(comp)
        b = Matrix(fld, rows, m.dims[v])
        binv = b.transpose().inverse()
        if binv is None:
            raise ValueError("inclusion blocks do not span a subspace cleanly")
        proj = binv.submatrix(range(sub_rows.nrows, m.dims[v]), range(m.dims[v]))
        sec = (
            Matrix(fld, comp, m.dims[v]).transpose()
            if comp
            else Matrix.zero(fld, m.dims[v], 0)
        )
        projs.append(proj)
        secs.append(sec)
    maps = []
    for j in range(len(q.arrows)):
        x, y = q.arrow_source[j], q.arrow_target[j]
        maps.append(projs[y] @ m.maps[j] @ secs[x])
    qrep = Representation(a, dims, maps, _checked=True)
    return qrep, Morphism(m, qrep, projs, _checked=True)


def kernel(f: Morphism):
    """(K, incl) with K = ker f as a subrepresentation of f.source."""
    a = f.source.algebra
    spaces = {}
    for v in range(a.quiver.n_vertices):
        kern = f.blocks[v].kernel_basis()
        spaces[a.quiver.vertices[v]] = [tuple(k.column_vector(0)) for k in kern]
    return submodule(f.source, spaces, close=False)


def image(f: Morphism):
    """(I, incl) with I = im f as a subrepresentation of f.target."""
    a = f.source.algebra
    spaces = {}
    for v in range(a.quiver.n_vertices):
        spaces[a.quiver.vertices[v]] = [
            f.blocks[v].column_vector(j) for j in range(f.blocks[v].ncols)
        ]
    return submodule(f.target, spaces, close=False)


def cokernel(f: Morphism):
    img, incl = image(f)
    return quotient_rep(f.target, incl)


def radical_rep(m: Representation):
    """(rad M, incl): the intersection of maximal subs = M * rad(A)."""
    a = m.algebra
    q = a.quiver
    spaces = {v: [] for v in q.vertices}
    for j in range(len(q.arrows)):
        y = q.arrow_target[j]
        for col in range(m.maps[j].ncols):
            spaces[q.vertices[y]].append(m.maps[j].column_vector(col))
    return submodule(m, spaces, close=False)


def socle_rep(m: Representation):
    """(soc M, incl): the largest semisimple subrepresentation."""
    a = m.algebra
    fld = a.field
    q = a.quiver
    spaces = {}
    for x in range(q.n_vertices):
        outgoing = [m.maps[j] for j in range(len(q.arrows)) if q.arrow_source[j] == x]
        if not outgoing:
            stacked = Matrix.zero(fld, 0, m.dims[x])
        else:
            stacked = outgoing[0]
            for mat in outgoing[1:]:
                stacked = stacked.vstack(mat)
        kern = stacked.kernel_basis()
        spaces[q.vertices[x]] = [tuple(k.column_vector(0)) for k in kern]
    return submodule(m, spaces, close=False)


def top_rep(m: Representation):
    """(top M, proj) = M / rad M."""
    _r, incl = radical_rep(m)
    return quotient_rep(m, incl)


def top_data(m: Representation):
    """Deterministic top basis: list of (vertex_label, lift vector in M)."""
    a = m.algebra
    fld = a.field
    q = a.quiver
    _rad, rad_incl = radical_rep(m)
    out = []
    for v in range(q.n_vertices):
        rad_rows = span_matrix(
            fld,
            [rad_incl.blocks[v].column_vector(j) for j in range(rad_incl.blocks[v].ncols)],
            m.dims[v],
        )
        for vec in complement_basis(rad_rows):
            out.append((q.vertices[v], vec))
    return out


# ---------------------------------------------------------------------------
# endomorphisms, isomorphism, decomposition


def end_structure(m: Representation):
    """(basis, StructureConstants) for End(m) in its hom basis."""
    from .algebra import StructureConstants

    basis = hom_basis(m, m)
    fld = m.algebra.field
    d = len(basis)
    if d == 0:
        return basis, StructureConstants(fld, 0, (), ())
    rows = [g.flatten() for g in basis]
    bmat = Matrix(fld, rows, len(rows[0]))
    table = []
    for f in basis:
        row = []
        for g in basis:
            co = coordinates_in_basis(bmat, compose(f, g).flatten())
            if co is None:
                raise ArithmeticError("End(m) is not closed under composition")
            row.append(tuple(co))
        table.append(tuple(row))
    unit = coordinates_in_basis(bmat, identity_morphism(m).flatten())
    return basis, StructureConstants(fld, d, tuple(table), tuple(unit))


def end_radical_morphisms(m: Representation):
    """Basis of rad End(m) as morphisms."""
    from .algebra import radical_span

    basis, sc = end_structure(m)
    if sc.dim == 0:
        return []
    rad = radical_span(sc)
    out = []
    for row in rad.rows:
        f = zero_morphism(m, m)
        for c, g in zip(row, basis):
            if c != m.algebra.field.zero():
                f = f + g.scale(c)
        out.append(f)
    return out


def is_indecomposable(m: Representation) -> bool:
    """End(m) local, i.e. dim End/rad End = 1 (m nonzero)."""
    if m.is_zero():
        return False
    basis, sc = end_structure(m)
    from .algebra import radical_span

    rad = radical_span(sc)
    return sc.dim - rad.nrows == 1


def _iso_between_indecomposables(m: Representation, n: Representation) -> bool:
    if m.dims != n.dims:
        return False
    fwd = hom_basis(m, n)
    bwd = hom_basis(n, m)
    if not fwd or not bwd:
        return m.total_dim == 0 and n.total_dim == 0
    # m ~ n iff some composite n -> m -> n is invertible iff the span of
    # composites is not contained in rad End(n); equivalently some composite
    # with the identity component nonzero exists.
    _basis, sc = end_structure(n)
    from .algebra import radical_span

    rad = radical_span(sc)
    basis_rows = [g.flatten() for g in _basis]
    bmat = Matrix(n.algebra.field, basis_rows, len(basis_rows[0]))
    for f in fwd:
        for g in bwd:
            comp = compose(f, g)  # n -> n
            co = coordinates_in_basis(bmat, comp.flatten())
            if co is not None and not _in_row_span(rad, co, n.algebra.field):
                return True
    return False


def _in_row_span(span, vec, fld):
    from .exactlin import in_span

    if span.nrows == 0:
        return all(c == fld.zero() for c in vec)
    return in_span(span, vec)


_decompose_cache: dict = {}


def decompose(m: Representation):
    """Indecomposable decomposition [(summand, multiplicity), ...].

    Splits along Fitting decompositions of non-invertible, non-nilpotent
    endomorphisms, searching candidates deterministically (End basis, then
    pairwise sums).  Raises :class:`DecompositionStalled` if End(m) is not
    local but no splitting is found.
    """
    hit = _decompose_cache.get(m)
    if hit is not None:
        return hit
    pieces = _split_completely(m)
    groups = []
    for p in pieces:
        for entry in groups:
            if _iso_between_indecomposables(entry[0], p):
                entry[1] += 1
                break
        else:
            groups.append([p, 1])
    result = [(rep, mult) for rep, mult in groups]
    if sum(rep.total_dim * mult for rep, mult in result) != m.total_dim:
        raise ArithmeticError("decomposition does not add up")
    _decompose_cache[m] = result
    return result


def _split_completely(m: Representation):
    if m.is_zero():
        return []
    basis, sc = end_structure(m)
    from .algebra import radical_span

    rad = radical_span(sc)
    if sc.dim - rad.nrows == 1:
        return [m]
    fld = m.algebra.field
    candidates = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            candidates.append(basis[i] + basis[j])
    for i in range(len(basis)):
        for j in range(len(basis)):
            if i != j:
                candidates.append(basis[i] + basis[j].scale(fld.coerce(2)))
    n = m.total_dim
    for f in candidates:
        power = f
        steps = 1
        while steps < n:
            power = compose(power, power)
            steps *= 2
        k, k_incl = kernel(power)
        if 0 < k.total_dim < m.total_dim:
            img, i_incl = image(power)
            if k.total_dim + img.total_dim != m.total_dim:
                continue  # not yet a Fitting splitting (should not happen)
            return _split_completely(k) + _split_completely(img)
    raise DecompositionStalled(
        f"End has dim {sc.dim}, top dim {sc.dim - rad.nrows} > 1, "
        "but no splitting endomorphism was found"
    )


def is_isomorphic(m: Representation, n: Representation) -> bool:
    if m.algebra is not n.algebra:
        return False
    if m.dims != n.dims:
        return False
    dm = [(rep, mult) for rep, mult in decompose(m)]
    dn = [[rep, mult] for rep, mult in decompose(n)]
    for rep, mult in dm:
        found = False
        for entry in dn:
            if entry[1] > 0 and _iso_between_indecomposables(rep, entry[0]):
                if entry[1] < mult:
                    return False
                entry[1] -= mult
                found = True
                break
        if not found:
            return False
    return all(entry[1] == 0 for entry in dn)


# ---------------------------------------------------------------------------
# annihilators and module classes


def annihilator(m: Representation):
    """Echelon basis (list of element dicts) of Ann(m) = {a : m.a = 0}.

    Computed per parallel class; the union over classes spans the two-sided
    ideal of all annihilating elements.
    """
    a = m.algebra
    fld = a.field
    out = []
    for (src, tgt), idxs in sorted(a.basis_by_class().items()):
        if m.dims[src] == 0 or m.dims[tgt] == 0:
            for i in idxs:
                out.append({a.basis[i]: fld.one()})
            continue
        rows = [m.word_action(a.basis[i]).flatten() for i in idxs]
        mat = Matrix(fld, rows, m.dims[tgt] * m.dims[src])
        for kvec in mat.transpose().kernel_basis():
            elt = {}
            for pos, i in enumerate(idxs):
                c = kvec.rows[pos][0]
                if c != fld.zero():
                    elt[a.basis[i]] = c
            if elt:
                out.append(elt)
    return out


def annihilator_span(m: Representation):
    """Annihilator as a row-span of coordinate vectors."""
    a = m.algebra
    return span_matrix(a.field, [a.coords(e) for e in annihilator(m)], a.dim)


def is_faithful(m: Representation) -> bool:
    return annihilator_span(m).nrows == 0


def is_sincere(m: Representation) -> bool:
    return all(d > 0 for d in m.dims)


def fac_member(x: Representation, m: Representation) -> bool:
    """Whether x lies in Fac(m): some m^r -> x is surjective.

    Equivalent to the trace of m in x being all of x.
    """
    a = x.algebra
    fld = a.field
    homs = hom_basis(m, x)
    for v in range(a.quiver.n_vertices):
        vecs = []
        for f in homs:
            vecs.extend(f.blocks[v].column_vector(j) for j in range(f.blocks[v].ncols))
        if span_matrix(fld, vecs, x.dims[v]).nrows != x.dims[v]:
            return False
    return True


def sub_member(x: Representation, m: Representation) -> bool:
    """Whether x lies in Sub(m): some x -> m^r is injective.

    Equivalent to the joint kernel of all morphisms x -> m being zero.
    """
    a = x.algebra
    homs = hom_basis(x, m)
    for v in range(a.quiver.n_vertices):
        if x.dims[v] == 0:
            continue
        stacked = None
        for f in homs:
            stacked = f.blocks[v] if stacked is None else stacked.vstack(f.blocks[v])
        if stacked is None or stacked.kernel_basis():
            return False
    return True


# ---------------------------------------------------------------------------
# transport along quotients and extensions


def inflate_along_quotient(m: Representation, qmap: QuotientMap) -> Representation:
    """View a module over A with the ideal acting as zero as a module over B.

    Verifies that killed vertices carry dimension 0 and that surviving arrow
    actions define a representation of B (relation check included).
    """
    a = qmap.source
    b = qmap.target
    if m.algebra is not a:
        raise ValueError("module is not over the source of the quotient map")
    for v, alive in qmap.vertex_alive.items():
        if not alive and m.dim_at(v) != 0:
            raise ValueError(f"module is supported on killed vertex {v}")
    dims = [m.dim_at(v) for v in b.quiver.vertices]
    maps = []
    for ar in b.quiver.arrows:
        maps.append(m.maps[a.quiver.arrow_index[ar.name]])
    return Representation(b, dims, maps)


def restrict_along_quotient(m: Representation, qmap: QuotientMap) -> Representation:
    """View a module over B = A/I as a module over A via the surjection."""
    a = qmap.source
    b = qmap.target
    if m.algebra is not b:
        raise ValueError("module is not over the target of the quotient map")
    fld = a.field
    dims = [
        m.dim_at(v) if qmap.vertex_alive[v] else 0 for v in a.quiver.vertices
    ]
    maps = []
    for j, ar in enumerate(a.quiver.arrows):
        ds = dims[a.quiver.arrow_source[j]]
        dt = dims[a.quiver.arrow_target[j]]
        img = qmap.arrow_images[ar.name]
        if not img or ds == 0 or dt == 0:
            maps.append(Matrix.zero(fld, dt, ds))
        else:
            maps.append(m.element_action(img))
    return Representation(a, dims, maps)


def extend_by_zero(m: Representation, b: PresentedAlgebra) -> Representation:
    """Embed a module of A into mod B when A's quiver is a labeled subquiver.

    All vertices/arrows of B missing from A get dimension 0 / zero maps; B's
    relations are re-verified.
    """
    a = m.algebra
    fld = b.field
    dims = []
    for v in b.quiver.vertices:
        dims.append(m.dim_at(v) if v in a.quiver.vertex_index else 0)
    maps = []
    for j, ar in enumerate(b.quiver.arrows):
        if ar.name in a.quiver.arrow_index:
            maps.append(m.maps[a.quiver.arrow_index[ar.name]])
        else:
            maps.append(
                Matrix.zero(
                    fld, dims[b.quiver.arrow_target[j]], dims[b.quiver.arrow_source[j]]
                )
            )
    return Representation(b, dims, maps)
