"""Expected-form tables and minimizer predicates, written out independently of the package."""

from __future__ import annotations

# tripartite 2-color forms: state of classes 1..3, "any" may be polychromatic
FORM_PATTERNS = {
    1: ("any", "blue", "blue"),
    2: ("blue", "any", "blue"),
    3: ("blue", "blue", "any"),
    4: ("red", "any", "blue"),
    5: ("red", "blue", "any"),
    6: ("any", "red", "blue"),
    7: ("blue", "red", "any"),
    8: ("any", "blue", "red"),
    9: ("blue", "any", "red"),
    10: ("red", "red", "any"),
    11: ("red", "any", "red"),
    12: ("any", "red", "red"),
}


def forms_of(sizes, red_counts):
    out = set()
    for form, pattern in FORM_PATTERNS.items():
        ok = True
        for want, n, x in zip(pattern, sizes, red_counts):
            if want == "red" and x != n or want == "blue" and x != 0:
                ok = False
        if ok:
            out.add(form)
    return out


def predicted_forms(n1, n2, n3, X):
    """Best form(s) at a fixed red total X <= floor(N/2), classes sorted n1 <= n2 <= n3."""
    if X < n1:
        return {1}
    if 2 * X < n1 + n2:
        return {4}
    if X < n2:
        return {2, 4} if 2 * X == n1 + n2 else {2}
    if n1 + n2 <= n3:
        return {6} if X < n1 + n2 else {10}
    return {3, 6} if X < n3 else {8}


def region(n1, n2, n3, X):
    if X < n2:
        return "low"
    if n1 + n2 <= n3:
        return "A-mid" if X < n1 + n2 else "A-high"
    return "B-mid" if X < n3 else "B-high"


def quadruple_violations(rows):
    """Quadruples (a_i, b_i, a_j, b_j) with a_i, b_i, b_j > 0 = a_j and a full two-colored
    class i that break the inequalities forced by total swapping."""
    bad = []
    m = len(rows[0])
    for i, ri in enumerate(rows):
        n = sum(ri)
        for j, rj in enumerate(rows):
            if i == j:
                continue
            for a in range(m):
                for b in range(m):
                    if a == b:
                        continue
                    ai, bi, aj, bj = ri[a], ri[b], rj[a], rj[b]
                    if not (ai and bi and bj and aj == 0 and ai + bi == n):
                        continue
                    if ai <= bj and not (bj >= ai + bi and bj >= ai + aj):
                        bad.append((i, j, a, b))
                    if ai >= bj and not (ai >= bi + bj and ai >= aj + bj):
                        bad.append((i, j, a, b))
    return bad


def three_color_form(rows):
    """Form number 1..5 from the per-class color supports, or None."""
    supports = [frozenset(l for l, x in enumerate(r) if x) for r in rows]
    multi = [s for s in supports if len(s) > 1]
    if not multi:
        return 5
    if len(multi) == 1 and len(multi[0]) == 3:
        return 1
    if any(len(s) == 3 for s in multi) or len(set(multi)) != len(multi):
        return None
    return {1: 2, 2: 3, 3: 4}[len(multi)]
