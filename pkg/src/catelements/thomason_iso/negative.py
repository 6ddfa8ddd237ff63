"""The naive comparison maps between the two nerves, each run until it breaks.

Every control returns the failing operator in this package's orientation
(``m`` horizontal, ``n`` vertical, ``d_0`` drops vertex 0), the operator the
failure is usually quoted under, and the two values that disagree.
"""

from __future__ import annotations

import numpy as np

from ..simplicial import SimplicialMap, diagonal, is_simplicial_map
from .data import BarPair


def _lookup2(P: BarPair, m: int, n: int, obj_key, cols) -> int:
    return P.X2.encode(m, n, obj_key, cols)


def _lookupd(P: BarPair, m: int, n: int, obj_key, cols) -> int:
    return P.Xd.encode(m, n, obj_key, cols)


def _naive_square(P: BarPair, x11: int) -> int:
    """A (1,1)-simplex of N∫F (a 2-cell α on (f, φ)) ↦ the square (α, id_{x'})."""
    E, B, F = P.E, P.B, P.F
    _, [(u, (a,))] = P.X2.decode(1, 1, x11)
    alpha = E.cell2_keys[a][0]
    c2, x2 = E.obj_keys[E.tgt1[u]]
    s = B.sq_index[(alpha, F.category(c2).identity[x2])]
    return _lookupd(P, 1, 1, (B.hsrc[B.top[s]], (B.left[s],)), [(B.top[s], (s,))])


def _naive_vertical(P: BarPair, x01: int) -> int:
    """An object ``(c, x)`` in X_{0,1} of N∫F ↦ the vertical identity on it."""
    o, _ = P.X2.decode(0, 1, x01)
    b = P.B.obj_index[P.E.obj_keys[o]]
    return _lookupd(P, 0, 1, (b, (P.B.ver_identity[b],)), [])


def _objects_map(P: BarPair, inverse: bool = False) -> np.ndarray:
    """X_{0,0} of one nerve to X_{0,0} of the other, by the shared key ``(c, x)``."""
    E, B = P.E, P.B
    if inverse:
        return np.array([_lookup2(P, 0, 0, E.obj_index[B.obj_keys[P.Xd.decode(0, 0, s)[0][0]]], [])
                         for s in range(P.Xd.size(0, 0))], dtype=np.int64)
    return np.array([_lookupd(P, 0, 0, (B.obj_index[E.obj_keys[P.X2.decode(0, 0, s)[0]]], ()), [])
                     for s in range(P.X2.size(0, 0))], dtype=np.int64)


def _first(rep, op: str, level: int):
    for v in rep.violations:
        if v.witness and v.witness[0] == op and v.witness[1] == level:
            return int(v.witness[2])
    return None


def _result(name: str, rep, ours: str, expected: str, level: str, lhs: str | None, rhs: str | None,
            simplex: str | None, **extra) -> dict:
    failures = sorted({f"{v.witness[0]}@{v.witness[1]}" for v in rep.violations if v.witness})
    return {"control": name, "fails": not rep.ok, "failing_operators": failures,
            "operator": ours, "expected_operator": expected, "level": level,
            "witness": simplex, "lhs": lhs, "rhs": rhs, **extra}


def naive_phi_row(P: BarPair) -> dict:
    """Objects ↦ vertical identities and 2-cells ↦ squares (α, id), on the row n = 1."""
    S, T = P.X2.row(1).truncate(1), P.Xd.row(1).truncate(1)
    f0 = np.array([_naive_vertical(P, s) for s in range(S.size(0))], dtype=np.int64)
    f1 = np.array([_naive_square(P, s) for s in range(S.size(1))], dtype=np.int64)
    rep = is_simplicial_map(SimplicialMap(S, T, [f0, f1], name="naive Φ on row n=1"))
    x = _first(rep, "d_1", 1)
    lhs = rhs = simplex = None
    if x is not None:
        lhs = P.B.vlabel(P.Xd.decode(0, 1, int(T.faces[1][1][f1[x]]))[0][1][0])
        rhs = P.B.vlabel(P.Xd.decode(0, 1, int(f0[S.faces[1][1][x]]))[0][1][0])
        _, [(u, (a,))] = P.X2.decode(1, 1, x)
        simplex = P.E.label2(a)
    return _result("naive Φ on (1,1)-simplices", rep, "d_1^h", "d_1^v", "(1,1) → (0,1)",
                   lhs, rhs, simplex)


def naive_phi_diagonal(P: BarPair) -> dict:
    """The same naive Φ on the diagonals, degrees 0 and 1."""
    S, T = diagonal(P.X2).truncate(1), diagonal(P.Xd).truncate(1)
    f0 = _objects_map(P)
    f1 = np.array([_naive_square(P, s) for s in range(S.size(1))], dtype=np.int64)
    rep = is_simplicial_map(SimplicialMap(S, T, [f0, f1], name="naive Φ on diagonals"))
    x = _first(rep, "d_1", 1)
    lhs = rhs = simplex = None
    if x is not None:
        lhs = P.B.obj_labels[P.Xd.decode(0, 0, int(T.faces[1][1][f1[x]]))[0][0]]
        rhs = P.B.obj_labels[P.Xd.decode(0, 0, int(f0[S.faces[1][1][x]]))[0][0]]
        _, [(u, (a,))] = P.X2.decode(1, 1, x)
        simplex = P.E.label2(a)
    return _result("naive Φ on diagonals", rep, "d_1", "d_0", "1 → 0", lhs, rhs, simplex)


def naive_theta_column(P: BarPair, choice: int) -> dict:
    """Vertical morphisms φ: (c,x) → (c,x') ↦ the object (c,x) (choice 1) or (c,x') (choice 2)."""
    S, T = P.Xd.column(0).truncate(1), P.X2.column(0).truncate(1)
    E, B = P.E, P.B
    f0 = _objects_map(P, inverse=True)

    def image(s):
        (_, (v,)), _ = P.Xd.decode(0, 1, s)
        o = B.vsrc[v] if choice == 1 else B.vtgt[v]
        return _lookup2(P, 0, 1, E.obj_index[B.obj_keys[o]], [])

    f1 = np.array([image(s) for s in range(S.size(1))], dtype=np.int64)
    rep = is_simplicial_map(SimplicialMap(S, T, [f0, f1], name=f"naive Θ choice {choice}"))
    op = next((v.witness[0] for v in rep.violations if v.witness and v.witness[1] == 1), None)
    lhs = rhs = simplex = None
    if op is not None:
        i = int(op[2:])
        x = _first(rep, op, 1)
        lhs = E.obj_label(P.X2.decode(0, 0, int(T.faces[1][i][f1[x]]))[0])
        rhs = E.obj_label(P.X2.decode(0, 0, int(f0[S.faces[1][i][x]]))[0])
        simplex = B.vlabel(P.Xd.decode(0, 1, x)[0][1][0])
    return _result(f"naive Θ on (0,1)-simplices, choice {choice}", rep,
                   f"{op}^v" if op else "none", "d_0^v", "(0,1) → (0,0)", lhs, rhs, simplex)


def diagonal_theta(P: BarPair) -> dict:
    """Squares (α, φ) ↦ 2-cells α on (f, Ff(φ)); look for a 2-simplex with no possible image."""
    E, B, F, C = P.E, P.B, P.F, P.C
    S, T = diagonal(P.Xd), diagonal(P.X2)
    if S.max_dim < 2:
        raise ValueError("the diagonal control needs max_dim >= 2")

    def theta1(s_id: int) -> int:
        _, [(_, (s,))] = P.Xd.decode(1, 1, s_id)
        alpha, phi = B.sq_keys[s]
        f = C.src2[alpha]
        y2 = F.category(C.tgt1[f]).tgt[phi]
        u = E.cell1_index[(f, F.push_morphism(f, phi), y2)]
        a = E.cell2_index[(alpha, u)]
        return _lookup2(P, 1, 1, E.src1[u], [(u, (a,))])

    t1 = np.array([theta1(s) for s in range(S.size(1))], dtype=np.int64)
    t0 = _objects_map(P, inverse=True)
    low = is_simplicial_map(SimplicialMap(S.truncate(1), T.truncate(1), [t0, t1], name="diagonal Θ_1"))
    reachable = {tuple(T.faces[2][:, k]) for k in range(T.size(2))}
    wanted = t1[S.faces[2]]
    missing = [k for k in range(S.size(2)) if tuple(wanted[:, k]) not in reachable]

    def shaped(k: int) -> bool:
        """Top row of two non-identity squares over a row of vertical identity squares."""
        _, cols = P.Xd.decode(2, 2, k)
        top_nonid = all(C.identity2[C.src2[B.sq_keys[ss[0]][0]]] != B.sq_keys[ss[0]][0] for _, ss in cols)
        bottom_ids = all(ss[1] == B.sq_ver_identity[B.top[ss[1]]] for _, ss in cols)
        return top_nonid and bottom_ids

    def right_edge_is_identity(k: int) -> bool:
        _, cols = P.Xd.decode(2, 2, k)
        alpha, phi = B.sq_keys[cols[-1][1][0]]
        return F.category(C.tgt_obj(alpha)).is_identity(phi)

    displayed = sorted((k for k in missing if shaped(k)), key=lambda k: (right_edge_is_identity(k), k))
    pick = displayed[0] if displayed else (missing[0] if missing else None)
    witness = None
    if pick is not None:
        (o, vs), cols = P.Xd.decode(2, 2, pick)
        witness = " | ".join(" over ".join(B.slabel(s) for s in ss) for _, ss in cols)
    return {"control": "diagonal Θ on 2-simplices", "fails": bool(missing),
            "operator": "no 2-simplex with the required faces", "expected_operator": "no 2-simplex",
            "level": "2", "degree_one_commutes": low.ok, "two_simplices": int(S.size(2)),
            "without_image": len(missing), "displayed_shape_witnesses": len(displayed),
            "witness": witness}


def run_negative_controls(P: BarPair, composable: BarPair | None = None) -> list[dict]:
    """All naive maps on ``P``; the diagonal control runs on ``composable`` when given."""
    out = [naive_phi_row(P), naive_phi_diagonal(P), naive_theta_column(P, 1), naive_theta_column(P, 2)]
    out.append(diagonal_theta(composable or P))
    return out
