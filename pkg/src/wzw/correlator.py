"""Three-point vacuum correlator reductions over an abstract symbol algebra.

Words of current modes sit at the marked points 1, infinity and 0 of the
projective line, with local coordinates z - 1, 1/z and z.  A reduction step
removes the leading operator J(n) of one slot through the Ward identity for
the global function xi_i^n: the same current is inserted at the other two
slots with the expansion coefficients of that function in their local
coordinates, then commuted down to the vacuum.  Inserted modes are always
nonnegative, so the total depth drops at every step and the rewriting ends
in a scalar.

Scalars are polynomials in declared pairing symbols; the central element
acts by the integer level.  The bracket closes over one root direction at a
time plus the Cartan symbols: crossing two distinct root symbols is
rejected, matching the declared symbol set.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


class ReductionBudgetExceeded(RuntimeError):
    """Raised when the rewriting loop exceeds its step budget."""


# ----------------------------------------------------------------------------
# polynomials in named commuting symbols


class Poly:
    """Polynomial over the rationals in named commuting symbols.

    Monomials are stored as sorted tuples of symbol names, with repetition
    recording the power; the empty tuple is the constant term.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    key = tuple(sorted(mono))
                    acc = self.terms.get(key, 0) + c
                    if acc:
                        self.terms[key] = acc
                    else:
                        self.terms.pop(key, None)

    @classmethod
    def const(cls, value) -> "Poly":
        return cls({(): Fraction(value)})

    @classmethod
    def symbol(cls, name: str) -> "Poly":
        return cls({(name,): Fraction(1)})

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    __hash__ = None

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            acc = out.get(mono, 0) + c
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        p = Poly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = Poly()
        p.terms = {mono: -c for mono, c in self.terms.items()}
        return p

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(sorted(m1 + m2))
                acc = out.get(key, 0) + c1 * c2
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        p = Poly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def substitute(self, values: dict) -> "Poly":
        """Replace symbols by rationals or other polynomials."""
        result = Poly()
        for mono, c in self.terms.items():
            factor = Poly.const(c)
            for name in mono:
                rep = values.get(name)
                factor = factor * (Poly.symbol(name) if rep is None else self._coerce(rep))
            result = result + factor
        return result

    def symbols(self) -> set:
        return {name for mono in self.terms for name in mono}

    def divisible_by(self, name: str) -> bool:
        """True when every monomial contains the symbol (and the poly is nonzero)."""
        return bool(self.terms) and all(name in mono for mono in self.terms)

    def constant_value(self) -> Fraction:
        if set(self.terms) - {()}:
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def _sorted(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self._sorted():
            body = "*".join(mono)
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = body
            elif c == -1:
                piece = "-" + body
            else:
                piece = f"{c}*{body}"
            if parts and not piece.startswith("-"):
                parts.append("+" + piece)
            else:
                parts.append(piece)
        return "".join(parts)

    __repr__ = __str__

    def json_obj(self):
        out = []
        for mono, c in self._sorted():
            powers = {}
            for name in mono:
                powers[name] = powers.get(name, 0) + 1
            out.append({"coefficient": str(c), "powers": powers})
        return out


_ZERO = Poly()
_ONE = Poly.const(1)


# ----------------------------------------------------------------------------
# mode operators and pairing data


@dataclass(frozen=True, order=True)
class ModeOp:
    """One current mode: a root vector X(+/-)r(n) or a Cartan element h(n).

    data is (root, sign) for kind "x"; for kind "h" it is ("name", label)
    for a declared Cartan symbol or ("root", r) for the bracket element
    [X+r, X-r].
    """

    kind: str
    data: tuple
    mode: int

    def __str__(self) -> str:
        if self.kind == "x":
            root, sign = self.data
            return f"X{sign}{root}({self.mode})"
        tag, label = self.data
        name = label if tag == "name" else f"H_{label}"
        return f"{name}({self.mode})"


def root_mode(root: str, sign: int, mode: int) -> ModeOp:
    return ModeOp("x", (root, "+" if sign > 0 else "-"), mode)


def cartan_mode(mode: int, name: str = "H") -> ModeOp:
    return ModeOp("h", ("name", name), mode)


def _depth(word) -> int:
    return sum(-op.mode for op in word)


class PairingEnv:
    """Declared pairing data: root-vector pairings, Cartan evaluations, the level.

    Undeclared values fall back to deterministic symbols: <X+r, X-r> becomes
    x<r>, r(H) becomes <r><H>, <H, H'> concatenates the sorted names.  The
    root Gram matrix defaults to (r, r) = 2 and 0 for distinct symbols.
    """

    def __init__(self, level: int = 1, xpair=None, cartan_values=None, cartan_gram=None, root_gram=None):
        if not isinstance(level, int) or level < 0:
            raise ValueError("level must be a nonnegative integer")
        self.level = level
        self.xpair = {k: Poly._coerce(v) for k, v in (xpair or {}).items()}
        self.cartan_values = {k: Poly._coerce(v) for k, v in (cartan_values or {}).items()}
        self.cartan_gram = {tuple(sorted(k)): Poly._coerce(v) for k, v in (cartan_gram or {}).items()}
        self.root_gram = {tuple(sorted(k)): Fraction(v) for k, v in (root_gram or {}).items()}

    def xpair_value(self, root: str) -> Poly:
        val = self.xpair.get(root)
        if val is None:
            val = Poly.symbol(f"x{root}")
            self.xpair[root] = val
        return val

    def root_ip(self, r1: str, r2: str) -> Fraction:
        return self.root_gram.get(tuple(sorted((r1, r2))), Fraction(2 if r1 == r2 else 0))

    def root_on_cartan(self, root: str, cartan_data: tuple) -> Poly:
        tag, label = cartan_data
        if tag == "root":
            return self.xpair_value(label) * self.root_ip(root, label)
        val = self.cartan_values.get((root, label))
        if val is None:
            val = Poly.symbol(f"{root}{label}")
            self.cartan_values[(root, label)] = val
        return val

    def cartan_pair(self, d1: tuple, d2: tuple) -> Poly:
        t1, l1 = d1
        t2, l2 = d2
        if t1 == "root" and t2 == "root":
            return self.xpair_value(l1) * self.xpair_value(l2) * self.root_ip(l1, l2)
        if t1 == "root":
            return self.xpair_value(l1) * self.root_on_cartan(l1, d2)
        if t2 == "root":
            return self.xpair_value(l2) * self.root_on_cartan(l2, d1)
        key = tuple(sorted((l1, l2)))
        val = self.cartan_gram.get(key)
        if val is None:
            val = Poly.symbol("".join(key))
            self.cartan_gram[key] = val
        return val


def apply_bracket(a: ModeOp, b: ModeOp, env: PairingEnv):
    """[a, b] as a list of (coefficient, ModeOp) plus central terms (op None).

    Central contributions arrive with the level already multiplied in, since
    every slot carries a level-ell vacuum.
    """
    m, n = a.mode, b.mode
    if a.kind == "x" and b.kind == "x":
        (ra, sa), (rb, sb) = a.data, b.data
        if ra != rb:
            raise ValueError(f"bracket crosses distinct root symbols {ra!r} and {rb!r}")
        if sa == sb:
            return []
        out = [(Poly.const(1 if sa == "+" else -1), ModeOp("h", ("root", ra), m + n))]
        if m + n == 0 and m != 0:
            out.append((env.xpair_value(ra) * (m * env.level), None))
        return out
    if a.kind == "h" and b.kind == "x":
        root, sign = b.data
        val = env.root_on_cartan(root, a.data)
        if not val:
            return []
        if sign == "-":
            val = -val
        return [(val, ModeOp("x", b.data, m + n))]
    if a.kind == "x" and b.kind == "h":
        return [(-c, op) for c, op in apply_bracket(b, a, env)]
    # both Cartan: only the central term survives
    if m + n != 0 or m == 0:
        return []
    val = env.cartan_pair(a.data, b.data)
    if not val:
        return []
    return [(val * (m * env.level), None)]


# ----------------------------------------------------------------------------
# states


@dataclass(frozen=True)
class Term:
    coefficient: Poly
    slots: tuple  # three tuples of ModeOp, outermost operator first


@dataclass(frozen=True)
class CorrelatorState:
    """Formal sum of three-slot words applied to vacua at the marked points."""

    terms: tuple

    @staticmethod
    def single(slot1=(), slot2=(), slot3=(), coefficient=None) -> "CorrelatorState":
        coeff = _ONE if coefficient is None else Poly._coerce(coefficient)
        return CorrelatorState((Term(coeff, (tuple(slot1), tuple(slot2), tuple(slot3))),))

    def __add__(self, other: "CorrelatorState") -> "CorrelatorState":
        return CorrelatorState(self.terms + other.terms)

    def map_symbols(self, rename) -> "CorrelatorState":
        """Rename root and Cartan labels; used by the relabeling invariance tests."""
        def rn(op):
            if op.kind == "x":
                root, sign = op.data
                return ModeOp("x", (rename.get(root, root), sign), op.mode)
            tag, label = op.data
            return ModeOp("h", (tag, rename.get(label, label)), op.mode)

        return CorrelatorState(
            tuple(
                Term(t.coefficient, tuple(tuple(rn(op) for op in w) for w in t.slots))
                for t in self.terms
            )
        )

    def swap_slots(self, i: int, j: int) -> "CorrelatorState":
        def sw(slots):
            s = list(slots)
            s[i - 1], s[j - 1] = s[j - 1], s[i - 1]
            return tuple(s)

        return CorrelatorState(tuple(Term(t.coefficient, sw(t.slots)) for t in self.terms))


def case_vacua() -> CorrelatorState:
    return CorrelatorState.single()


def case_opposite_pair(root: str = "a") -> CorrelatorState:
    return CorrelatorState.single(
        (), (root_mode(root, +1, -1),), (root_mode(root, -1, -1),)
    )


def case_cartan_insertion(root: str = "b", cartan: str = "H") -> CorrelatorState:
    return CorrelatorState.single(
        (cartan_mode(-1, cartan),), (root_mode(root, +1, -1),), (root_mode(root, -1, -1),)
    )


def annihilate_vacuum(state: CorrelatorState) -> CorrelatorState:
    """Drop terms whose slot words end in a nonnegative mode next to the vacuum."""
    kept = tuple(
        t for t in state.terms
        if not any(w and w[-1].mode >= 0 for w in t.slots)
    )
    return CorrelatorState(kept)


# ----------------------------------------------------------------------------
# normal ordering and gauge moves


def _merge(pairs):
    acc = {}
    for coeff, word in pairs:
        prev = acc.get(word)
        acc[word] = coeff if prev is None else prev + coeff
    return [(c, w) for w, c in acc.items() if c]


def _push(word, op, env):
    """op . word |0> with op.mode >= 0, expanded into all-negative words."""
    if not word:
        return []
    head, rest = word[0], word[1:]
    out = []
    for coeff, tail in _push(rest, op, env):
        out.append((coeff, (head,) + tail))
    for coeff, bop in apply_bracket(op, head, env):
        if bop is None:
            out.append((coeff, rest))
        elif bop.mode >= 0:
            for c2, tail in _push(rest, bop, env):
                out.append((coeff * c2, tail))
        else:
            out.append((coeff, (bop,) + rest))
    return _merge(out)


def _normalize_word(word, env):
    """Expand a word into all-negative-mode words applied to the vacuum."""
    out = [(_ONE, ())]
    for op in reversed(tuple(word)):
        new = []
        for coeff, tail in out:
            if op.mode < 0:
                new.append((coeff, (op,) + tail))
            else:
                for c2, tail2 in _push(tail, op, env):
                    new.append((coeff * c2, tail2))
        out = _merge(new)
    return out


def _binom(n: int, k: int) -> Fraction:
    num = 1
    for t in range(k):
        num *= n - t
    return Fraction(num, math.factorial(k))


def _insertion_modes(i: int, j: int, n: int, max_mode: int):
    """Expansion of xi_i^n in the coordinate at slot j, modes capped by max_mode.

    Slots are 0-based here: 0, 1, 2 sit at 1, infinity, 0 with coordinates
    z - 1, 1/z, z.  For nonpositive n the function is regular away from the
    marked points and every inserted mode is nonnegative.
    """
    out = []
    if i == 0 and j == 1:  # (z-1)^n in powers of 1/z
        k = 0
        while k - n <= max_mode:
            c = _binom(n, k) * (-1 if k % 2 else 1)
            if c:
                out.append((k - n, c))
            k += 1
    elif i == 0 and j == 2:  # (z-1)^n in powers of z
        for k in range(max_mode + 1):
            c = _binom(n, k) * (-1 if (n + k) % 2 else 1)
            if c:
                out.append((k, c))
    elif i == 1 and j == 0:  # z^{-n} in powers of z-1
        for k in range(max_mode + 1):
            c = _binom(-n, k)
            if c:
                out.append((k, c))
    elif i == 1 and j == 2:  # z^{-n} is already a power of z
        if 0 <= -n <= max_mode:
            out.append((-n, Fraction(1)))
    elif i == 2 and j == 0:  # z^n in powers of z-1
        for k in range(max_mode + 1):
            c = _binom(n, k)
            if c:
                out.append((k, c))
    elif i == 2 and j == 1:  # z^n is a power of 1/z
        if 0 <= -n <= max_mode:
            out.append((-n, Fraction(1)))
    else:
        raise ValueError(f"bad slot pair ({i}, {j})")
    return out


def _gauge_step(slots, i, env):
    """One Ward-identity rewrite removing the leading operator of slot i.

    Returns (coefficient, slots) pairs with the identity's minus sign
    already folded into the coefficients.
    """
    op = slots[i][0]
    rest_i = slots[i][1:]
    n = op.mode
    if n > 0:
        raise ValueError("positive leading modes are removed by normal ordering, not gauge moves")
    out = []
    for j in range(3):
        if j == i:
            continue
        cap = _depth(slots[j])
        for k, c in _insertion_modes(i, j, n, cap):
            for c2, wj in _push(slots[j], ModeOp(op.kind, op.data, k), env):
                new = list(slots)
                new[i] = rest_i
                new[j] = wj
                out.append((Poly.const(-c) * c2, tuple(new)))
    return _merge(out)


def gauge_move(state: CorrelatorState, which_slot: int, op: ModeOp, env: PairingEnv) -> CorrelatorState:
    """Rewrite every term by removing the given leading operator of a slot.

    which_slot is 1-based.  The operator must be the leading (outermost)
    entry of that slot in every term, and its mode must be nonpositive so
    the gauge function xi^n stays regular away from the marked points.
    """
    if which_slot not in (1, 2, 3):
        raise ValueError("which_slot must be 1, 2 or 3")
    i = which_slot - 1
    new_terms = []
    for t in state.terms:
        if not t.slots[i] or t.slots[i][0] != op:
            raise ValueError(f"{op} is not the leading operator of slot {which_slot}")
        for coeff, slots in _gauge_step(t.slots, i, env):
            new_terms.append(Term(t.coefficient * coeff, slots))
    return CorrelatorState(tuple(new_terms))


def default_strategy(slots) -> int:
    """Gauge away the highest-numbered nonempty slot first."""
    for i in (2, 1, 0):
        if slots[i]:
            return i
    raise ValueError("no nonempty slot")


def reduce_state(state: CorrelatorState, env: PairingEnv, strategy=None, budget: int = 10000) -> Poly:
    """Fully reduce a state to its scalar, a polynomial in the pairing symbols."""
    strategy = strategy or default_strategy
    work = {}
    for t in state.terms:
        expansions = [_normalize_word(w, env) for w in t.slots]
        for c1, w1 in expansions[0]:
            for c2, w2 in expansions[1]:
                for c3, w3 in expansions[2]:
                    key = (w1, w2, w3)
                    add = t.coefficient * c1 * c2 * c3
                    prev = work.get(key)
                    work[key] = add if prev is None else prev + add
    result = _ZERO
    steps = 0
    while work:
        key = max(work, key=lambda k: (sum(_depth(w) for w in k), k))
        poly = work.pop(key)
        if not poly:
            continue
        if not any(key):
            result = result + poly
            continue
        steps += 1
        if steps > budget:
            raise ReductionBudgetExceeded(
                f"no scalar after {budget} gauge moves; {len(work) + 1} open terms, "
                f"deepest {sum(_depth(w) for w in key)}"
            )
        i = strategy(key)
        if not key[i]:
            raise ValueError(f"strategy chose empty slot {i + 1}")
        for coeff, slots in _gauge_step(key, i, env):
            add = poly * coeff
            prev = work.get(slots)
            work[slots] = add if prev is None else prev + add
    return result


# ----------------------------------------------------------------------------
# the script language

_TERM_RE = re.compile(r"^(?:X([+-])([A-Za-z][A-Za-z0-9_]*)|H)\((-?\d+)\)$")
_SLOT_RE = re.compile(r"^slot([123])\s*:\s*(.*)$")


def parse_script(text: str):
    """Parse the correlator term language into a state and its environment.

    Grammar, one directive per line ('#' starts a comment):

        level <nonnegative integer>
        slot<i>: <term> <term> ...      with i in 1, 2, 3

    where a term is X+<root>(<mode>), X-<root>(<mode>) or H(<mode>); the
    leftmost term is the outermost operator.  Roots are identifiers; each
    distinct root is an independent direction.  Missing slots are vacua.
    """
    level = 1
    slots = {1: None, 2: None, 3: None}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("level"):
            rest = line[len("level"):].strip()
            if not rest.isdigit():
                raise ValueError(f"bad level directive: {raw.strip()!r}")
            level = int(rest)
            continue
        m = _SLOT_RE.match(line)
        if not m:
            raise ValueError(f"cannot parse script line: {raw.strip()!r}")
        idx = int(m.group(1))
        if slots[idx] is not None:
            raise ValueError(f"slot{idx} given twice")
        ops = []
        for tok in m.group(2).split():
            tm = _TERM_RE.match(tok)
            if not tm:
                raise ValueError(f"cannot parse term {tok!r}")
            sign, root, mode = tm.groups()
            if sign is None:
                ops.append(cartan_mode(int(mode)))
            else:
                ops.append(root_mode(root, +1 if sign == "+" else -1, int(mode)))
        slots[idx] = tuple(ops)
    state = CorrelatorState.single(slots[1] or (), slots[2] or (), slots[3] or ())
    return state, PairingEnv(level=level)
