"""Naive pure-Python reference implementations used as independent oracles.

Every function here walks the ring tables with plain loops, with no shared
code with the library's vectorized scans.  Expected values in the tests
are either frozen from these oracles or checked against them directly.
"""

from __future__ import annotations


def naive_units(R) -> list[int]:
    out = []
    for a in range(R.order):
        if any(int(R.mul[a, b]) == R.one and int(R.mul[b, a]) == R.one
               for b in range(R.order)):
            out.append(a)
    return out


def naive_inverse(R, a: int) -> int | None:
    for b in range(R.order):
        if int(R.mul[a, b]) == R.one and int(R.mul[b, a]) == R.one:
            return b
    return None


def naive_idempotents(R) -> list[int]:
    return [a for a in range(R.order) if int(R.mul[a, a]) == a]


def naive_nilpotents(R) -> list[int]:
    out = []
    for a in range(R.order):
        p = a
        for _ in range(R.order):
            if p == R.zero:
                out.append(a)
                break
            p = int(R.mul[p, a])
    return out


def naive_tripotents(R) -> list[int]:
    return [a for a in range(R.order)
            if int(R.mul[int(R.mul[a, a]), a]) == a]


def naive_jacobson(R) -> list[int]:
    units = set(naive_units(R))
    out = []
    for a in range(R.order):
        good = True
        for r in range(R.order):
            prod = int(R.mul[r, a])
            if R.sub(R.one, prod) not in units:
                good = False
                break
        if good:
            out.append(a)
    return out


def naive_delta(R) -> list[int]:
    units = naive_units(R)
    uset = set(units)
    return [a for a in range(R.order)
            if all(int(R.add[a, u]) in uset for u in units)]


def naive_quasinilpotents(R) -> list[int]:
    units = set(naive_units(R))
    out = []
    for a in range(R.order):
        good = True
        for x in range(R.order):
            if int(R.mul[a, x]) != int(R.mul[x, a]):
                continue
            if int(R.add[R.one, int(R.mul[a, x])]) not in units:
                good = False
                break
        if good:
            out.append(a)
    return out


def naive_center(R) -> list[int]:
    return [a for a in range(R.order)
            if all(int(R.mul[a, r]) == int(R.mul[r, a]) for r in range(R.order))]


def naive_is_two_delta_u(R) -> bool:
    delta = set(naive_delta(R))
    for u in naive_units(R):
        if R.sub(int(R.mul[u, u]), R.one) not in delta:
            return False
    return True


def naive_is_delta_u(R) -> bool:
    delta = set(naive_delta(R))
    units = set(naive_units(R))
    if any(R.sub(u, R.one) not in delta for u in units):
        return False
    return all(int(R.add[R.one, d]) in units for d in delta)


def naive_is_uj(R) -> bool:
    jac = set(naive_jacobson(R))
    units = set(naive_units(R))
    if any(R.sub(u, R.one) not in jac for u in units):
        return False
    return all(int(R.add[R.one, j]) in units for j in jac)


def naive_is_uu(R) -> bool:
    nil = set(naive_nilpotents(R))
    units = set(naive_units(R))
    if any(R.sub(u, R.one) not in nil for u in units):
        return False
    return all(int(R.add[R.one, q]) in units for q in nil)


def naive_is_j_clean(R) -> bool:
    jac = naive_jacobson(R)
    idem = naive_idempotents(R)
    sums = {int(R.add[e, j]) for e in idem for j in jac}
    return len(sums) == R.order


def naive_is_semi_tripotent(R) -> bool:
    jac = naive_jacobson(R)
    trip = naive_tripotents(R)
    sums = {int(R.add[e, j]) for e in trip for j in jac}
    return len(sums) == R.order


def naive_is_strongly_2_nil_clean(R) -> bool:
    idem = naive_idempotents(R)
    nil = set(naive_nilpotents(R))

    def commute(x, y):
        return int(R.mul[x, y]) == int(R.mul[y, x])

    for a in range(R.order):
        found = False
        for e1 in idem:
            for e2 in idem:
                if not commute(e1, e2):
                    continue
                q = R.sub(R.sub(a, e1), e2)
                if q in nil and commute(e1, q) and commute(e2, q):
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True
