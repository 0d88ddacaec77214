"""Operation constructions: reversal, star, catenation, and the direct
product-style DFAs for the two combined operations.

The direct constructions materialize only reachable states, found by a
breadth-first walk taking symbols in alphabet order, so state numbering
is deterministic and counts never exceed the closed-form size bounds.
State subsets are integer bitmasks.
"""

from __future__ import annotations

from .automata import AlphabetMismatch, Dfa, Nfa, minimize_hopcroft, reverse_nfa
from .witnesses import empty_dfa, sigma_star_dfa

__all__ = [
    "ShapeError",
    "reverse_nfa",
    "catenation_nfa",
    "star_nfa",
    "revcat_direct",
    "revcat_n1_direct",
    "starcat_special_direct",
    "starcat_general_direct",
    "combined",
]


class ShapeError(ValueError):
    """Raised when an operand does not fit the construction's required shape."""


def _require_same_alphabet(a, b) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(
            f"operands use different alphabets {a.alphabet!r} and {b.alphabet!r}"
        )


def _mask(states) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def _preimage_masks(d: Dfa) -> list[list[int]]:
    """pre[s][q] is the bitmask of states that move to q on symbol s."""
    nsym = len(d.alphabet)
    pre = [[0] * d.state_count for _ in range(nsym)]
    for s in range(nsym):
        row = d.transitions[s]
        ps = pre[s]
        for q in range(d.state_count):
            ps[row[q]] |= 1 << q
    return pre


def catenation_nfa(a: Nfa, b: Dfa) -> Nfa:
    """Catenation of an Nfa with a Dfa: disjoint union with free moves
    from every final state of a to b's initial state; finals are b's."""
    _require_same_alphabet(a, b)
    off = a.state_count
    rows = []
    for s in range(len(a.alphabet)):
        brow = b.transitions[s]
        rows.append(
            a.transitions[s]
            + tuple(frozenset((brow[q] + off,)) for q in range(b.state_count))
        )
    eps = set(a.epsilon_edges)
    for f in a.finals:
        eps.add((f, off + b.initial))
    return Nfa(
        state_count=off + b.state_count,
        alphabet=a.alphabet,
        transitions=tuple(rows),
        initials=a.initials,
        epsilon_edges=frozenset(eps),
        finals=frozenset(off + q for q in b.finals),
    )


def star_nfa(a: Dfa) -> Nfa:
    """Nfa for L(a)*.

    A fresh state (index a.state_count) is both initial and final and
    copies the initial state's outgoing moves; nothing enters it.  Every
    move into a final state of a also targets a.initial, which re-enters
    the loop without free moves.
    """
    n = a.state_count
    init = a.initial
    fins = a.finals
    rows = []
    for s in range(len(a.alphabet)):
        row = a.transitions[s]
        new_row = [
            frozenset((row[q], init)) if row[q] in fins else frozenset((row[q],))
            for q in range(n)
        ]
        new_row.append(new_row[init])
        rows.append(tuple(new_row))
    return Nfa(
        state_count=n + 1,
        alphabet=a.alphabet,
        transitions=tuple(rows),
        initials=frozenset((n,)),
        epsilon_edges=frozenset(),
        finals=frozenset(fins) | frozenset((n,)),
    )


def revcat_direct(m: Dfa, n: Dfa) -> Dfa:
    """Direct DFA for L(m)^R L(n).

    States are reachable pairs (i, j): i a subset of m's states walked
    under preimages (the reversal part), j a subset of n's states.  n's
    initial state joins j exactly when i contains m's initial state,
    which is when the prefix read so far lies in L(m)^R.  Final when j
    meets n's finals.  At most 3/4 * 2^(m+n) states are reachable.
    """
    _require_same_alphabet(m, n)
    nsym = len(m.alphabet)
    pre = _preimage_masks(m)
    init_bit = 1 << m.initial
    sn_bit = 1 << n.initial
    fn_mask = _mask(n.finals)
    nrows = n.transitions

    i0 = _mask(m.finals)
    j0 = sn_bit if i0 & init_bit else 0
    start = (i0, j0)
    index = {start: 0}
    order = [start]
    rows: list[list[int]] = [[] for _ in range(nsym)]
    k = 0
    while k < len(order):
        i, j = order[k]
        for s in range(nsym):
            ps = pre[s]
            i2 = 0
            t = i
            while t:
                low = t & -t
                i2 |= ps[low.bit_length() - 1]
                t -= low
            nrow = nrows[s]
            j2 = 0
            t = j
            while t:
                low = t & -t
                j2 |= 1 << nrow[low.bit_length() - 1]
                t -= low
            if i2 & init_bit:
                j2 |= sn_bit
            key = (i2, j2)
            idx = index.get(key)
            if idx is None:
                idx = len(order)
                index[key] = idx
                order.append(key)
            rows[s].append(idx)
        k += 1

    finals = frozenset(idx for idx, (_, j) in enumerate(order) if j & fn_mask)
    return Dfa(
        state_count=len(order),
        alphabet=m.alphabet,
        transitions=tuple(tuple(r) for r in rows),
        initial=0,
        finals=finals,
    )


def revcat_n1_direct(m: Dfa, n_accepting: bool) -> Dfa:
    """Direct DFA for L(m)^R L(n) when n is a one-state DFA.

    A rejecting n gives the empty language.  An accepting n gives
    L(m)^R followed by anything, so every subset containing m's initial
    state collapses into one absorbing final state.  At most
    2^(m-1) + 1 states are reachable.
    """
    if not n_accepting:
        return empty_dfa(m.alphabet)
    nsym = len(m.alphabet)
    pre = _preimage_masks(m)
    init_bit = 1 << m.initial

    SINK = -1  # the merged absorbing final state
    i0 = _mask(m.finals)
    start = SINK if i0 & init_bit else i0
    index = {start: 0}
    order = [start]
    rows: list[list[int]] = [[] for _ in range(nsym)]
    k = 0
    while k < len(order):
        cur = order[k]
        for s in range(nsym):
            if cur == SINK:
                key = SINK
            else:
                ps = pre[s]
                i2 = 0
                t = cur
                while t:
                    low = t & -t
                    i2 |= ps[low.bit_length() - 1]
                    t -= low
                key = SINK if i2 & init_bit else i2
            idx = index.get(key)
            if idx is None:
                idx = len(order)
                index[key] = idx
                order.append(key)
            rows[s].append(idx)
        k += 1

    finals = frozenset((index[SINK],)) if SINK in index else frozenset()
    return Dfa(
        state_count=len(order),
        alphabet=m.alphabet,
        transitions=tuple(tuple(r) for r in rows),
        initial=0,
        finals=finals,
    )


def starcat_special_direct(a: Dfa, b: Dfa) -> Dfa:
    """Direct DFA for L(a) L(b) (= L(a)* L(b)) when a's only final state
    is its initial state.

    States are reachable pairs (q, T): q a state of a, T a nonempty
    subset of b's states; b's initial state joins T exactly when q lands
    on a's initial (and only final) state.  At most
    m(2^n - 1) - 2^(n-1) + 1 states are reachable.
    """
    _require_same_alphabet(a, b)
    if a.finals != frozenset((a.initial,)):
        raise ShapeError(
            "starcat_special_direct needs the first operand's single final "
            "state to be its initial state"
        )
    if b.state_count < 2:
        raise ShapeError("starcat_special_direct needs a second operand with >= 2 states")
    nsym = len(a.alphabet)
    s1 = a.initial
    s2_bit = 1 << b.initial
    f2_mask = _mask(b.finals)
    arows = a.transitions
    brows = b.transitions

    start = (s1, s2_bit)
    index = {start: 0}
    order = [start]
    rows: list[list[int]] = [[] for _ in range(nsym)]
    k = 0
    while k < len(order):
        q, tmask = order[k]
        for s in range(nsym):
            q2 = arows[s][q]
            brow = brows[s]
            t2 = 0
            t = tmask
            while t:
                low = t & -t
                t2 |= 1 << brow[low.bit_length() - 1]
                t -= low
            if q2 == s1:
                t2 |= s2_bit
            key = (q2, t2)
            idx = index.get(key)
            if idx is None:
                idx = len(order)
                index[key] = idx
                order.append(key)
            rows[s].append(idx)
        k += 1

    finals = frozenset(idx for idx, (_, t) in enumerate(order) if t & f2_mask)
    return Dfa(
        state_count=len(order),
        alphabet=a.alphabet,
        transitions=tuple(tuple(r) for r in rows),
        initial=0,
        finals=finals,
    )


def starcat_general_direct(a: Dfa, b: Dfa) -> Dfa:
    """Direct DFA for L(a)* L(b) when a has a final state other than its
    initial state.

    States are reachable pairs (p, t) of subsets.  After each step, when
    the image p meets a's finals, a's initial state joins p (star
    re-entry) and b's initial state joins t.  Final when t meets b's
    finals.  The reachable count never exceeds
    (3/4 * 2^m - 1)(2^n - 1) - (2^(m-1) - 2^(m-k1-1))(2^(n-1) - 1)
    with k1 the number of non-initial final states of a.
    """
    _require_same_alphabet(a, b)
    if not a.finals:
        raise ShapeError("starcat_general_direct needs at least one final state")
    if a.finals == frozenset((a.initial,)):
        raise ShapeError(
            "first operand's only final state is its initial state; "
            "use starcat_special_direct"
        )
    if b.state_count < 2:
        raise ShapeError("starcat_general_direct needs a second operand with >= 2 states")
    nsym = len(a.alphabet)
    f1_mask = _mask(a.finals)
    s1_bit = 1 << a.initial
    s2_bit = 1 << b.initial
    f2_mask = _mask(b.finals)
    arows = a.transitions
    brows = b.transitions

    start = (s1_bit, s2_bit)
    index = {start: 0}
    order = [start]
    rows: list[list[int]] = [[] for _ in range(nsym)]
    k = 0
    while k < len(order):
        p, tmask = order[k]
        for s in range(nsym):
            arow = arows[s]
            p2 = 0
            t = p
            while t:
                low = t & -t
                p2 |= 1 << arow[low.bit_length() - 1]
                t -= low
            brow = brows[s]
            t2 = 0
            t = tmask
            while t:
                low = t & -t
                t2 |= 1 << brow[low.bit_length() - 1]
                t -= low
            if p2 & f1_mask:
                p2 |= s1_bit
                t2 |= s2_bit
            key = (p2, t2)
            idx = index.get(key)
            if idx is None:
                idx = len(order)
                index[key] = idx
                order.append(key)
            rows[s].append(idx)
        k += 1

    finals = frozenset(idx for idx, (_, t) in enumerate(order) if t & f2_mask)
    return Dfa(
        state_count=len(order),
        alphabet=a.alphabet,
        transitions=tuple(tuple(r) for r in rows),
        initial=0,
        finals=finals,
    )


def combined(op: str, a: Dfa, b: Dfa, minimized: bool = False) -> Dfa:
    """Dispatch to the right direct construction for the operation.

    op is "revcat" for L(a)^R L(b) or "starcat" for L(a)* L(b).  With
    minimized=True the result is minimized before returning.
    """
    _require_same_alphabet(a, b)
    if op == "revcat":
        if b.state_count == 1 and a.state_count >= 2:
            out = revcat_n1_direct(a, bool(b.finals))
        else:
            out = revcat_direct(a, b)
    elif op == "starcat":
        if b.state_count == 1:
            # L(b) is all words or none, and the star factor always
            # contributes the empty word
            out = sigma_star_dfa(a.alphabet) if b.finals else empty_dfa(a.alphabet)
        elif not a.finals:
            # L(a)* is just the empty word, so the product is L(b)
            out = b
        elif a.finals == frozenset((a.initial,)):
            out = starcat_special_direct(a, b)
        else:
            out = starcat_general_direct(a, b)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return minimize_hopcroft(out) if minimized else out
