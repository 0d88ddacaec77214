"""Deterministic and nondeterministic finite automata.

States are integers 0..state_count-1 and symbols are single characters.
A Dfa is always complete: every (state, symbol) pair has exactly one
target.  Subsets of states are handled as integer bitmasks throughout,
which keeps the subset construction and minimization fast enough to run
inside exhaustive searches over millions of machines.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class AlphabetMismatch(ValueError):
    """Raised when a binary operation mixes automata over different alphabets."""


def _check_alphabet(alphabet: tuple[str, ...]) -> None:
    if not alphabet:
        raise ValueError("alphabet must contain at least one symbol")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError("alphabet symbols must be distinct")
    for sym in alphabet:
        if not isinstance(sym, str) or len(sym) != 1:
            raise ValueError(f"alphabet symbol {sym!r} must be a single character")


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton.

    transitions[s][q] is the target of state q on symbol alphabet[s].
    """

    state_count: int
    alphabet: tuple[str, ...]
    transitions: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self) -> None:
        n = self.state_count
        if n < 1:
            raise ValueError("a Dfa needs at least one state")
        _check_alphabet(self.alphabet)
        if len(self.transitions) != len(self.alphabet):
            raise ValueError("one transition row per alphabet symbol required")
        for row in self.transitions:
            if len(row) != n:
                raise ValueError("every transition row must cover all states")
            if row and (min(row) < 0 or max(row) >= n):
                raise ValueError("transition target out of range")
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        for q in self.finals:
            if not 0 <= q < n:
                raise ValueError("final state out of range")

    def symbol_index(self) -> dict[str, int]:
        return {sym: s for s, sym in enumerate(self.alphabet)}


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton with optional epsilon edges.

    transitions[s][q] is the frozenset of targets of q on alphabet[s];
    epsilon_edges are (source, target) pairs taken for free.
    """

    state_count: int
    alphabet: tuple[str, ...]
    transitions: tuple[tuple[frozenset[int], ...], ...]
    initials: frozenset[int]
    epsilon_edges: frozenset[tuple[int, int]]
    finals: frozenset[int]

    def __post_init__(self) -> None:
        n = self.state_count
        if n < 1:
            raise ValueError("an Nfa needs at least one state")
        _check_alphabet(self.alphabet)
        if len(self.transitions) != len(self.alphabet):
            raise ValueError("one transition row per alphabet symbol required")
        for row in self.transitions:
            if len(row) != n:
                raise ValueError("every transition row must cover all states")
            for targets in row:
                for t in targets:
                    if not 0 <= t < n:
                        raise ValueError("transition target out of range")
        for group in (self.initials, self.finals):
            for q in group:
                if not 0 <= q < n:
                    raise ValueError("state out of range")
        for u, v in self.epsilon_edges:
            if not 0 <= u < n or not 0 <= v < n:
                raise ValueError("epsilon edge endpoint out of range")


def nfa_from_dfa(d: Dfa) -> Nfa:
    """Reinterpret a Dfa as an Nfa with singleton target sets."""
    rows = tuple(
        tuple(frozenset((row[q],)) for q in range(d.state_count))
        for row in d.transitions
    )
    return Nfa(
        state_count=d.state_count,
        alphabet=d.alphabet,
        transitions=rows,
        initials=frozenset((d.initial,)),
        epsilon_edges=frozenset(),
        finals=d.finals,
    )


@dataclass(frozen=True)
class SubsetMap:
    """Which subset of Nfa states each Dfa state produced by determinize stands for.

    subsets[i] is the sorted tuple of Nfa states behind Dfa state i;
    position 0 is the epsilon closure of the initial set.
    """

    subsets: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.subsets)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.subsets[i]

    def index_of(self, subset: frozenset[int]) -> int:
        target = tuple(sorted(subset))
        for i, s in enumerate(self.subsets):
            if s == target:
                return i
        raise KeyError(f"subset {target} not reachable")


def _mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask -= low
    return out


def determinize(nfa: Nfa) -> tuple[Dfa, SubsetMap]:
    """Subset construction with epsilon closure.

    Dfa states are the reachable closed subsets, numbered in the order a
    breadth-first walk from the closed initial set discovers them, taking
    symbols in alphabet order.  The empty subset becomes an ordinary dead
    state when reached.
    """
    nsym = len(nfa.alphabet)
    n = nfa.state_count

    if nfa.epsilon_edges:
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in nfa.epsilon_edges:
            adj[u].append(v)
        closure = []
        for q in range(n):
            mask = 1 << q
            stack = [q]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not (mask >> y) & 1:
                        mask |= 1 << y
                        stack.append(y)
            closure.append(mask)
    else:
        closure = [1 << q for q in range(n)]

    # Closure is folded into the move table so the scan below never
    # needs a separate closure pass.
    move: list[list[int]] = []
    for s in range(nsym):
        row = nfa.transitions[s]
        srow = []
        for q in range(n):
            m = 0
            for t in row[q]:
                m |= closure[t]
            srow.append(m)
        move.append(srow)

    start = 0
    for q in nfa.initials:
        start |= closure[q]
    final_mask = 0
    for q in nfa.finals:
        final_mask |= 1 << q

    index = {start: 0}
    order = [start]
    rows: list[list[int]] = [[] for _ in range(nsym)]
    i = 0
    while i < len(order):
        cur = order[i]
        for s in range(nsym):
            mv = move[s]
            t = 0
            mm = cur
            while mm:
                low = mm & -mm
                t |= mv[low.bit_length() - 1]
                mm -= low
            j = index.get(t)
            if j is None:
                j = len(order)
                index[t] = j
                order.append(t)
            rows[s].append(j)
        i += 1

    finals = frozenset(i for i, msk in enumerate(order) if msk & final_mask)
    dfa = Dfa(
        state_count=len(order),
        alphabet=nfa.alphabet,
        transitions=tuple(tuple(r) for r in rows),
        initial=0,
        finals=finals,
    )
    subset_map = SubsetMap(tuple(tuple(_mask_bits(msk)) for msk in order))
    return dfa, subset_map


def _reachable(d: Dfa) -> list[int]:
    """States reachable from the initial one, in breadth-first alphabet order."""
    nsym = len(d.alphabet)
    trans = d.transitions
    order = [d.initial]
    seen = {d.initial}
    i = 0
    while i < len(order):
        q = order[i]
        for s in range(nsym):
            t = trans[s][q]
            if t not in seen:
                seen.add(t)
                order.append(t)
        i += 1
    return order


def minimize_hopcroft(d: Dfa) -> Dfa:
    """Unique minimal Dfa for the same language.

    Restricts to reachable states, refines the final/nonfinal split with
    Hopcroft's smaller-half worklist, then renumbers blocks breadth-first
    from the initial block in alphabet order so equal inputs give equal
    outputs.  Blocks are kept as bitmasks; splits touch only the states in
    the preimage of the splitter.
    """
    nsym = len(d.alphabet)
    reach = _reachable(d)
    n = len(reach)
    newid = {q: k for k, q in enumerate(reach)}
    rows = [[newid[d.transitions[s][q]] for q in reach] for s in range(nsym)]
    fin_mask = 0
    for q in d.finals:
        k = newid.get(q)
        if k is not None:
            fin_mask |= 1 << k

    full = (1 << n) - 1
    pre = [[0] * n for _ in range(nsym)]
    for s in range(nsym):
        row = rows[s]
        ps = pre[s]
        for q in range(n):
            ps[row[q]] |= 1 << q

    nonfin = full & ~fin_mask
    blocks: list[int] = []
    block_of = [0] * n
    if fin_mask and nonfin:
        blocks = [fin_mask, nonfin]
        for q in _mask_bits(nonfin):
            block_of[q] = 1
        smaller = 0 if fin_mask.bit_count() <= nonfin.bit_count() else 1
        worklist = [smaller]
        inwork = {smaller}
    else:
        blocks = [full]
        worklist = []
        inwork = set()

    while worklist:
        bi = worklist.pop()
        inwork.discard(bi)
        splitter = blocks[bi]
        for s in range(nsym):
            ps = pre[s]
            x = 0
            mm = splitter
            while mm:
                low = mm & -mm
                x |= ps[low.bit_length() - 1]
                mm -= low
            if not x:
                continue
            affected: dict[int, int] = {}
            mm = x
            while mm:
                low = mm & -mm
                b = block_of[low.bit_length() - 1]
                affected[b] = affected.get(b, 0) | low
                mm -= low
            for yi, inter in affected.items():
                y = blocks[yi]
                if inter == y:
                    continue
                rest = y & ~inter
                # relabel the smaller part; the other keeps index yi
                ni = len(blocks)
                if inter.bit_count() <= rest.bit_count():
                    blocks[yi] = rest
                    blocks.append(inter)
                    for q in _mask_bits(inter):
                        block_of[q] = ni
                else:
                    blocks[yi] = inter
                    blocks.append(rest)
                    for q in _mask_bits(rest):
                        block_of[q] = ni
                # the appended block is the smaller part either way
                worklist.append(ni)
                inwork.add(ni)

    qorder = [block_of[0]]
    qnew = {block_of[0]: 0}
    qrows: list[list[int]] = [[] for _ in range(nsym)]
    i = 0
    while i < len(qorder):
        b = qorder[i]
        rep = (blocks[b] & -blocks[b]).bit_length() - 1
        for s in range(nsym):
            tb = block_of[rows[s][rep]]
            j = qnew.get(tb)
            if j is None:
                j = len(qorder)
                qnew[tb] = j
                qorder.append(tb)
            qrows[s].append(j)
        i += 1

    qfinals = frozenset(i for i, b in enumerate(qorder) if blocks[b] & fin_mask)
    return Dfa(
        state_count=len(qorder),
        alphabet=d.alphabet,
        transitions=tuple(tuple(r) for r in qrows),
        initial=0,
        finals=qfinals,
    )


def minimize(d: Dfa) -> Dfa:
    return minimize_hopcroft(d)


def reverse_nfa(d: Dfa) -> Nfa:
    """Nfa for the reversed language: edges flipped, roles of initial and finals swapped."""
    nsym = len(d.alphabet)
    n = d.state_count
    rows = []
    for s in range(nsym):
        row = d.transitions[s]
        targets: list[list[int]] = [[] for _ in range(n)]
        for q in range(n):
            targets[row[q]].append(q)
        rows.append(tuple(frozenset(t) for t in targets))
    return Nfa(
        state_count=n,
        alphabet=d.alphabet,
        transitions=tuple(rows),
        initials=frozenset(d.finals),
        epsilon_edges=frozenset(),
        finals=frozenset((d.initial,)),
    )


def minimize_brzozowski(d: Dfa) -> Dfa:
    """Minimal Dfa by double reversal; slower than Hopcroft but independent of it."""
    mid, _ = determinize(reverse_nfa(d))
    out, _ = determinize(reverse_nfa(mid))
    return out


def accepts(d: Dfa, word: str) -> bool:
    idx = {sym: s for s, sym in enumerate(d.alphabet)}
    state = d.initial
    for ch in word:
        s = idx.get(ch)
        if s is None:
            raise ValueError(f"symbol {ch!r} is not in the alphabet")
        state = d.transitions[s][state]
    return state in d.finals


def nfa_accepts(nfa: Nfa, word: str) -> bool:
    idx = {sym: s for s, sym in enumerate(nfa.alphabet)}
    n = nfa.state_count
    if nfa.epsilon_edges:
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in nfa.epsilon_edges:
            adj[u].append(v)

        def close(mask: int) -> int:
            stack = _mask_bits(mask)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not (mask >> y) & 1:
                        mask |= 1 << y
                        stack.append(y)
            return mask
    else:
        def close(mask: int) -> int:
            return mask

    cur = 0
    for q in nfa.initials:
        cur |= 1 << q
    cur = close(cur)
    for ch in word:
        s = idx.get(ch)
        if s is None:
            raise ValueError(f"symbol {ch!r} is not in the alphabet")
        row = nfa.transitions[s]
        nxt = 0
        for q in _mask_bits(cur):
            for t in row[q]:
                nxt |= 1 << t
        cur = close(nxt)
    return any((cur >> q) & 1 for q in nfa.finals)


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Language equality via a product walk over reachable state pairs."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(
            f"cannot compare over alphabets {a.alphabet!r} and {b.alphabet!r}"
        )
    nsym = len(a.alphabet)
    afin, bfin = a.finals, b.finals
    at, bt = a.transitions, b.transitions
    if (a.initial in afin) != (b.initial in bfin):
        return False
    start = (a.initial, b.initial)
    seen = {start}
    stack = [start]
    while stack:
        p, q = stack.pop()
        for s in range(nsym):
            np, nq = at[s][p], bt[s][q]
            if (np in afin) != (nq in bfin):
                return False
            pair = (np, nq)
            if pair not in seen:
                seen.add(pair)
                stack.append(pair)
    return True


def distinguishing_word(d: Dfa, p: int, q: int) -> str | None:
    """Shortest word accepted from exactly one of states p, q; None if none exists.

    Breadth-first over state pairs taking symbols in alphabet order, so
    among shortest witnesses the alphabet-lexicographically first wins.
    None means the two states accept the same language, i.e. minimization
    merges them.
    """
    for s in (p, q):
        if not 0 <= s < d.state_count:
            raise ValueError(f"state {s} out of range for {d.state_count} states")
    nsym = len(d.alphabet)
    finals = d.finals
    trans = d.transitions
    if (p in finals) != (q in finals):
        return ""
    start = (p, q)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for pair in frontier:
            u, v = pair
            for s in range(nsym):
                child = (trans[s][u], trans[s][v])
                if child in parent:
                    continue
                parent[child] = (pair, s)
                if (child[0] in finals) != (child[1] in finals):
                    word = []
                    node: tuple[int, int] | None = child
                    while node is not None:
                        step = parent[node]
                        if step is None:
                            break
                        node, sym = step
                        word.append(d.alphabet[sym])
                    return "".join(reversed(word))
                nxt.append(child)
        frontier = nxt
    return None


def enumerate_accepted(d: Dfa, max_len: int) -> list[str]:
    """All accepted words of length at most max_len, shortest first, ties in alphabet order."""
    out = []
    idx = d.symbol_index()
    trans = d.transitions
    finals = d.finals
    for length in range(max_len + 1):
        for chars in product(d.alphabet, repeat=length):
            state = d.initial
            for ch in chars:
                state = trans[idx[ch]][state]
            if state in finals:
                out.append("".join(chars))
    return out
