"""Independent small-scale invariants used only for cross-checking.

Both oracles work straight from the braid-closure diagram and share nothing
with the main engine except the exact ring arithmetic:

* `kauffman_jones` -- bracket state sum over all 2^c smoothings of the braid
  closure, with writhe normalisation.  Variable convention (frozen once, on
  the positive trefoil): the braid word [1, 1, 1] yields
  -t^-4 + t^-3 + t^-1, which matches the main engine under t = q^2 with no
  residual mirror.
* `burau_alexander` -- determinant of (I - reduced Burau matrix), divided
  exactly by 1 + t + ... + t^(n-1).  Defined up to a unit ±t^k; use
  `normalize_unit` before comparing.
"""

from __future__ import annotations

from .braid import BraidWord, require_knot, writhe
from .rings import OneVarLaurent, RingError

MAX_STATE_SUM_CROSSINGS = 16


def _delta_powers(max_power):
    """Powers of the loop value -A^2 - A^-2 as raw {exponent: coeff} dicts."""
    powers = [{0: 1}]
    delta = {2: -1, -2: -1}
    for _ in range(max_power):
        prev = powers[-1]
        out = {}
        for e1, c1 in prev.items():
            for e2, c2 in delta.items():
                k = e1 + e2
                out[k] = out.get(k, 0) + c1 * c2
        powers.append(out)
    return powers


def kauffman_jones(beta: BraidWord, force: bool = False) -> OneVarLaurent:
    """Jones polynomial of the braid closure via the bracket state sum,
    normalised to 1 on the unknot, as a Laurent polynomial in t."""
    c = len(beta.letters)
    if c > MAX_STATE_SUM_CROSSINGS:
        raise ValueError(f"state sum limited to {MAX_STATE_SUM_CROSSINGS} "
                         f"crossings, got {c}")
    require_knot(beta, force)
    n = beta.strands
    size = (c + 1) * n
    parent = [0] * size

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    deltas = _delta_powers(n + c)
    bracket = {}
    for state in range(1 << c):
        for v in range(size):
            parent[v] = v
        a_exp = 0
        for idx, letter in enumerate(beta.letters):
            i = abs(letter) - 1
            base, nxt = idx * n, (idx + 1) * n
            smooth_flat = ((state >> idx) & 1) == 0
            if letter > 0:
                a_exp += 1 if smooth_flat else -1
            else:
                a_exp += -1 if smooth_flat else 1
            for j in range(n):
                if j != i and j != i + 1:
                    union(base + j, nxt + j)
            if smooth_flat:
                union(base + i, nxt + i)
                union(base + i + 1, nxt + i + 1)
            else:
                union(base + i, base + i + 1)
                union(nxt + i, nxt + i + 1)
        top = c * n
        for j in range(n):
            union(top + j, j)
        loops = sum(1 for v in range(size) if find(v) == v)
        for e, coeff in deltas[loops - 1].items():
            k = e + a_exp
            bracket[k] = bracket.get(k, 0) + coeff
    w = writhe(beta)
    sign = -1 if w % 2 else 1
    out = {}
    for e, coeff in bracket.items():
        if not coeff:
            continue
        shifted = e - 3 * w
        if shifted % 4:
            raise RingError("bracket exponent not divisible by 4; "
                            "closure is probably not a knot")
        out[shifted // 4] = sign * coeff
    return OneVarLaurent(out, "t")


def _burau_blocks(n, t_exp_sign):
    """Reduced Burau generator blocks; t_exp_sign=-1 gives the inverses."""
    t = lambda e: OneVarLaurent.monomial(1, e, "t")
    one, zero = OneVarLaurent.one("t"), OneVarLaurent.zero("t")
    if t_exp_sign > 0:
        first = [[-t(1), zero], [one, one]]
        mid = [[one, t(1), zero], [zero, -t(1), zero], [zero, one, one]]
        last = [[one, t(1)], [zero, -t(1)]]
    else:
        first = [[-t(-1), zero], [t(-1), one]]
        mid = [[one, one, zero], [zero, -t(-1), zero], [zero, t(-1), one]]
        last = [[one, one], [zero, -t(-1)]]
    return first, mid, last


def _burau_matrix(n, letter):
    """(n-1) x (n-1) reduced Burau matrix of a single signed letter."""
    i = abs(letter)
    dim = n - 1
    one, zero = OneVarLaurent.one("t"), OneVarLaurent.zero("t")
    mat = [[one if r == c else zero for c in range(dim)] for r in range(dim)]
    first, mid, last = _burau_blocks(n, 1 if letter > 0 else -1)
    if dim == 1:
        mat[0][0] = first[0][0]  # the 1x1 case: just the -t^± pivot
        return mat
    if i == 1:
        block, r0 = first, 0
    elif i == n - 1:
        block, r0 = last, n - 3
    else:
        block, r0 = mid, i - 2
    for r in range(len(block)):
        for c in range(len(block)):
            mat[r0 + r][r0 + c] = block[r][c]
    return mat


def _mat_mul(a, b):
    dim = len(a)
    zero = OneVarLaurent.zero("t")
    out = [[zero for _ in range(dim)] for _ in range(dim)]
    for r in range(dim):
        for c in range(dim):
            acc = zero
            for k in range(dim):
                if a[r][k] and b[k][c]:
                    acc = acc + a[r][k] * b[k][c]
            out[r][c] = acc
    return out


def _det(mat):
    dim = len(mat)
    if dim == 0:
        return OneVarLaurent.one("t")
    if dim == 1:
        return mat[0][0]
    acc = OneVarLaurent.zero("t")
    for c in range(dim):
        if not mat[0][c]:
            continue
        minor = [[mat[r][cc] for cc in range(dim) if cc != c]
                 for r in range(1, dim)]
        term = mat[0][c] * _det(minor)
        acc = acc + term if c % 2 == 0 else acc - term
    return acc


def burau_alexander(beta: BraidWord, force: bool = False) -> OneVarLaurent:
    """Alexander polynomial of the braid closure (up to a unit ±t^k) via the
    reduced Burau determinant; the final division must be exact and raises
    otherwise, which doubles as a correctness check."""
    require_knot(beta, force)
    n = beta.strands
    dim = n - 1
    one, zero = OneVarLaurent.one("t"), OneVarLaurent.zero("t")
    prod = [[one if r == c else zero for c in range(dim)] for r in range(dim)]
    for letter in beta.letters:
        prod = _mat_mul(prod, _burau_matrix(n, letter))
    delta = [[(one if r == c else zero) - prod[r][c] for c in range(dim)]
             for r in range(dim)]
    det = _det(delta)
    cyclic = OneVarLaurent({e: 1 for e in range(n)}, "t")
    return det.exact_div(cyclic)


def normalize_unit(p: OneVarLaurent) -> OneVarLaurent:
    """Normalise away the ±t^k unit: shift the lowest exponent to zero and
    make its coefficient positive."""
    if not p:
        return p
    lo = p.min_exponent()
    sign = 1 if p.terms[lo] > 0 else -1
    return p.times_monomial(sign, -lo)


def mirror(p: OneVarLaurent) -> OneVarLaurent:
    """Substitute the variable by its inverse."""
    return OneVarLaurent({-e: c for e, c in p.terms.items()}, p.var)


def jones_to_classical(p_q: OneVarLaurent) -> OneVarLaurent:
    """Rewrite an engine value (even powers of q only) in t = q^2."""
    out = {}
    for e, c in p_q.terms.items():
        if e % 2:
            raise RingError(f"odd q-exponent {e}: not in Z[q^±2]")
        out[e // 2] = c
    return OneVarLaurent(out, "t")


def ado2_to_classical(phi) -> OneVarLaurent:
    """Rewrite a colour-2 root-of-unity value (integer coefficients, even
    powers of s only) in t = s^2, for comparison against `burau_alexander`."""
    out = {}
    for e, c in phi.terms.items():
        if e % 2:
            raise RingError(f"odd s-exponent {e}: not in Z[s^±2]")
        out[e // 2] = c.to_int()
    return OneVarLaurent(out, "t")


def alexander_match_up_to_unit(a: OneVarLaurent, b: OneVarLaurent) -> bool:
    return normalize_unit(a) == normalize_unit(b)
