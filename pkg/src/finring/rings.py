"""Finite commutative rings and modules with 0-based element indexing.

Every ring exposes total operations on element indices ``0..order-1``, both
scalar and numpy-vectorised.  Available constructions: integers mod n, Galois
fields, direct products, quotients by an ideal, and trivial (square-zero)
extensions of a ring by a module.  Rings of order <= TABLE_LIMIT carry dense
operation tables; larger rings evaluate structurally on demand, which keeps
extensions with a few tens of thousands of elements workable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundExceededError, ConsistencyError, RingBuildError

TABLE_LIMIT = 1024   # dense op tables are built below this order
MODULE_LIMIT = 1024  # modules are always table-backed

Literal = "int | tuple"  # element literals: ints for zmod/gf, tuples for pairs


def render_literal(lit) -> str:
    if isinstance(lit, tuple):
        return "(" + ",".join(render_literal(x) for x in lit) + ")"
    return str(lit)


@dataclass(frozen=True)
class RingSpec:
    """Provenance tree recording how a ring was constructed."""

    kind: str
    params: tuple = ()
    children: tuple = ()

    def label(self) -> str:
        if self.kind == "zmod":
            return f"zmod({self.params[0]})"
        if self.kind == "gf":
            return f"gf({self.params[0]},{self.params[1]})"
        if self.kind == "product":
            a, b = self.children
            return f"product({a.label()},{b.label()})"
        if self.kind == "quotient":
            gens = ",".join(render_literal(g) for g in self.params[0])
            return f"quotient({self.children[0].label()},[{gens}])"
        if self.kind == "trivext":
            ring, mod = self.children
            return f"trivext({ring.label()},{mod.label()})"
        raise ValueError(f"unknown ring spec kind {self.kind!r}")


@dataclass(frozen=True)
class ModuleSpec:
    """Provenance tree recording how a module was constructed."""

    kind: str
    params: tuple = ()
    children: tuple = ()

    def label(self) -> str:
        if self.kind == "free":
            return f"free({self.children[0].label()},{self.params[0]})"
        if self.kind == "quot_module":
            gens = ",".join(render_literal(g) for g in self.params[0])
            return f"quot_module({self.children[0].label()},[{gens}])"
        if self.kind == "sum":
            a, b = self.children
            return f"sum({a.label()},{b.label()})"
        if self.kind == "zero":
            return f"zero({self.children[0].label()})"
        raise ValueError(f"unknown module spec kind {self.kind!r}")


class FiniteRing:
    """Finite commutative ring on element indices 0..order-1 (0 is zero)."""

    def __init__(self, order: int, one: int, spec: RingSpec | None):
        if order < 2:
            raise RingBuildError("a ring needs at least the two elements 0 and 1")
        self.order = order
        self.zero = 0
        self.one = one
        self.spec = spec
        self._cache: dict = {}
        self._tables = None
        if order <= TABLE_LIMIT:
            idx = np.arange(order, dtype=np.int64)
            add = np.asarray(self._add_impl(idx[:, None], idx[None, :]), dtype=np.int64)
            mul = np.asarray(self._mul_impl(idx[:, None], idx[None, :]), dtype=np.int64)
            neg = np.asarray(self._neg_impl(idx), dtype=np.int64)
            self._tables = (add, mul, neg)
        if self.one == self.zero:
            raise RingBuildError("ring has 1 = 0")

    # subclasses implement the structural operations; they must accept both
    # plain ints and numpy arrays (broadcasting allowed)
    def _add_impl(self, a, b):
        raise NotImplementedError

    def _mul_impl(self, a, b):
        raise NotImplementedError

    def _neg_impl(self, a):
        raise NotImplementedError

    @property
    def name(self) -> str:
        return self.spec.label() if self.spec is not None else f"ring#{self.order}"

    def elements(self) -> range:
        return range(self.order)

    def add(self, i: int, j: int) -> int:
        if self._tables is not None:
            return int(self._tables[0][i, j])
        return int(self._add_impl(i, j))

    def mul(self, i: int, j: int) -> int:
        if self._tables is not None:
            return int(self._tables[1][i, j])
        return int(self._mul_impl(i, j))

    def neg(self, i: int) -> int:
        if self._tables is not None:
            return int(self._tables[2][i])
        return int(self._neg_impl(i))

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def add_arr(self, a, b):
        if self._tables is not None:
            return self._tables[0][a, b]
        return self._add_impl(a, b)

    def mul_arr(self, a, b):
        if self._tables is not None:
            return self._tables[1][a, b]
        return self._mul_impl(a, b)

    def neg_arr(self, a):
        if self._tables is not None:
            return self._tables[2][a]
        return self._neg_impl(a)

    # literal codecs: names elements in the spec-file / report syntax
    def encode_literal(self, lit) -> int:
        raise NotImplementedError

    def decode_literal(self, i: int):
        raise NotImplementedError

    def describe_element(self, i: int) -> str:
        return render_literal(self.decode_literal(i))

    def __repr__(self) -> str:
        return f"<FiniteRing {self.name} order={self.order}>"


class ZmodRing(FiniteRing):
    """Integers modulo n with residue indexing."""

    def __init__(self, n: int, spec: RingSpec | None = None):
        if n < 2:
            raise RingBuildError(f"zmod modulus must be >= 2, got {n}")
        self.n = n
        super().__init__(n, 1, spec or RingSpec("zmod", (n,)))

    def _add_impl(self, a, b):
        return (a + b) % self.n

    def _mul_impl(self, a, b):
        return (a * b) % self.n

    def _neg_impl(self, a):
        return (-a) % self.n

    def encode_literal(self, lit) -> int:
        if not isinstance(lit, int):
            raise RingBuildError(f"{self.name} elements are integers, got {render_literal(lit)}")
        return lit % self.n

    def decode_literal(self, i: int):
        return int(i)


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul_mod(a, b, modulus, p):
    """Product of coefficient tuples a*b reduced mod (modulus, p); modulus monic."""
    k = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    # reduce degree >= k using x^k = -(modulus[0..k-1])
    for d in range(len(out) - 1, k - 1, -1):
        c = out[d]
        if c:
            out[d] = 0
            for i in range(k):
                out[d - k + i] = (out[d - k + i] - c * modulus[i]) % p
    return _poly_trim(out[:k] + [0] * max(0, k - len(out)) if len(out) >= k else out)


def _poly_divmod(a, b, p):
    """Divide coefficient tuples over F_p; b must have invertible lead."""
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(0, da - db + 1)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        c = (a[-1] * inv_lead) % p
        q[da - db] = c
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - c * b[i]) % p
        a = list(_poly_trim(a))
        if not a:
            break
    return _poly_trim(q), _poly_trim(a)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_irreducible_mod_p(coeffs: tuple[int, ...], p: int) -> bool:
    """Exhaustive divisor check for irreducibility of coeffs over F_p."""
    c = [x % p for x in coeffs]
    poly = _poly_trim(list(c))
    k = len(poly) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    # try every monic divisor of degree 1..k//2
    for d in range(1, k // 2 + 1):
        for body in range(p**d):
            cand = []
            t = body
            for _ in range(d):
                cand.append(t % p)
                t //= p
            cand.append(1)
            _, rem = _poly_divmod(poly, tuple(cand), p)
            if not rem:
                return False
    return True


class GFRing(FiniteRing):
    """Galois field F_{p^k} as F_p[x]/(f); element index encodes digits base p."""

    def __init__(self, p: int, k: int, poly: tuple[int, ...], spec: RingSpec | None = None):
        if not is_prime(p):
            raise RingBuildError(f"gf characteristic must be prime, got {p}")
        if k < 1:
            raise RingBuildError(f"gf degree must be >= 1, got {k}")
        coeffs = tuple(c % p for c in poly)
        if len(coeffs) != k + 1 or coeffs[-1] == 0:
            raise RingBuildError(f"gf modulus must have degree exactly {k} with unit lead")
        if coeffs[-1] != 1:
            inv = pow(coeffs[-1], -1, p)
            coeffs = tuple((c * inv) % p for c in coeffs)
        if not is_irreducible_mod_p(coeffs, p):
            raise RingBuildError(f"gf modulus {list(poly)} is reducible mod {p}")
        q = p**k
        if q > TABLE_LIMIT:
            raise RingBuildError(f"gf order {q} above the supported bound {TABLE_LIMIT}")
        self.p, self.k, self.modulus = p, k, coeffs[:-1]
        self._exp, self._log = self._build_log_tables(p, k, coeffs)
        super().__init__(q, 1, spec or RingSpec("gf", (p, k, tuple(poly))))

    @staticmethod
    def _build_log_tables(p, k, modulus):
        q = p**k
        if q == 2:  # trivial multiplicative group: 1 is its own generator
            return np.array([1, 1], dtype=np.int64), np.array([-1, 0], dtype=np.int64)

        def enc(tup):
            v = 0
            for i, c in enumerate(tup):
                v += c * p**i
            return v

        def dec(v):
            out = []
            for _ in range(k):
                out.append(v % p)
                v //= p
            return _poly_trim(out)

        for g in range(2, q):
            seen = [enc((1,))]
            cur = (1,)
            gd = dec(g)
            for _ in range(q - 2):
                cur = _poly_mul_mod(cur, gd, modulus, p)
                seen.append(enc(cur))
            if len(set(seen)) == q - 1:
                exp = np.array(seen + seen, dtype=np.int64)  # doubled: no mod needed
                log = np.full(q, -1, dtype=np.int64)
                for e, v in enumerate(seen):
                    log[v] = e
                return exp, log
        raise ConsistencyError("no multiplicative generator found; field build is wrong")

    def _add_impl(self, a, b):
        res = 0
        w = 1
        for _ in range(self.k):
            res = res + (((a // w) % self.p + (b // w) % self.p) % self.p) * w
            w *= self.p
        return res

    def _mul_impl(self, a, b):
        r = self._exp[self._log[a] + self._log[b]]
        return np.where((np.asarray(a) == 0) | (np.asarray(b) == 0), 0, r)

    def _neg_impl(self, a):
        res = 0
        w = 1
        for _ in range(self.k):
            res = res + ((self.p - (a // w) % self.p) % self.p) * w
            w *= self.p
        return res

    def encode_literal(self, lit) -> int:
        if not isinstance(lit, int) or not 0 <= lit < self.order:
            raise RingBuildError(f"{self.name} elements are integers in 0..{self.order - 1}")
        return lit

    def decode_literal(self, i: int):
        return int(i)


# Pinned irreducible moduli (low coefficient first) so that every consumer of
# gf(p, k) builds literally the same field.
STANDARD_GF_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
}


def standard_gf(p: int, k: int) -> GFRing:
    """The Galois field F_{p^k} built on the library's pinned modulus."""
    if k == 1:
        return GFRing(p, 1, (0, 1))
    poly = STANDARD_GF_MODULI.get((p, k))
    if poly is None:
        raise RingBuildError(
            f"no pinned modulus for gf({p},{k}); construct GFRing with an "
            "explicit one")
    return GFRing(p, k, poly)


class ProductRing(FiniteRing):
    """Direct product with lexicographic pair indexing (first factor major)."""

    def __init__(self, left: FiniteRing, right: FiniteRing, spec: RingSpec | None = None):
        self.left, self.right = left, right
        self._m = right.order
        one = left.one * self._m + right.one
        if spec is None:
            spec = RingSpec("product", (), (left.spec, right.spec))
        super().__init__(left.order * right.order, one, spec)

    def _add_impl(self, a, b):
        m = self._m
        return self.left.add_arr(a // m, b // m) * m + self.right.add_arr(a % m, b % m)

    def _mul_impl(self, a, b):
        m = self._m
        return self.left.mul_arr(a // m, b // m) * m + self.right.mul_arr(a % m, b % m)

    def _neg_impl(self, a):
        m = self._m
        return self.left.neg_arr(a // m) * m + self.right.neg_arr(a % m)

    def encode_literal(self, lit) -> int:
        if not isinstance(lit, tuple) or len(lit) != 2:
            raise RingBuildError(f"{self.name} elements are pairs, got {render_literal(lit)}")
        return self.left.encode_literal(lit[0]) * self._m + self.right.encode_literal(lit[1])

    def decode_literal(self, i: int):
        return (self.left.decode_literal(i // self._m), self.right.decode_literal(i % self._m))


class QuotientRing(FiniteRing):
    """Quotient of a parent ring on minimal coset representatives.

    Built by ideals.make_quotient, which supplies the representative and
    coset-id arrays; coset 0 is the ideal itself and carries index 0.
    """

    def __init__(self, parent: FiniteRing, reps: np.ndarray, coset_id: np.ndarray,
                 spec: RingSpec | None):
        self.parent = parent
        self.reps = reps
        self.coset_id = coset_id
        super().__init__(len(reps), int(coset_id[parent.one]), spec)

    def _add_impl(self, a, b):
        return self.coset_id[self.parent.add_arr(self.reps[a], self.reps[b])]

    def _mul_impl(self, a, b):
        return self.coset_id[self.parent.mul_arr(self.reps[a], self.reps[b])]

    def _neg_impl(self, a):
        return self.coset_id[self.parent.neg_arr(self.reps[a])]

    def encode_literal(self, lit) -> int:
        return int(self.coset_id[self.parent.encode_literal(lit)])

    def decode_literal(self, i: int):
        return self.parent.decode_literal(int(self.reps[i]))


class FiniteModule:
    """Finite module over a FiniteRing; always table-backed."""

    def __init__(self, base: FiniteRing, madd: np.ndarray, mneg: np.ndarray,
                 act: np.ndarray, spec: ModuleSpec | None,
                 encode=None, decode=None):
        self.base = base
        self.order = madd.shape[0]
        self.mzero = 0
        self.spec = spec
        self._madd, self._mneg, self._act = madd, mneg, act
        self._encode, self._decode = encode, decode
        if self.order > MODULE_LIMIT:
            raise RingBuildError(f"module order {self.order} above bound {MODULE_LIMIT}")

    @property
    def name(self) -> str:
        return self.spec.label() if self.spec is not None else f"module#{self.order}"

    def elements(self) -> range:
        return range(self.order)

    def madd(self, i: int, j: int) -> int:
        return int(self._madd[i, j])

    def mneg(self, i: int) -> int:
        return int(self._mneg[i])

    def act(self, a: int, e: int) -> int:
        return int(self._act[a, e])

    def madd_arr(self, a, b):
        return self._madd[a, b]

    def mneg_arr(self, a):
        return self._mneg[a]

    def act_arr(self, a, e):
        return self._act[a, e]

    def encode_literal(self, lit) -> int:
        return self._encode(lit)

    def decode_literal(self, i: int):
        return self._decode(i)

    def describe_element(self, i: int) -> str:
        return render_literal(self.decode_literal(i))

    def __repr__(self) -> str:
        return f"<FiniteModule {self.name} order={self.order} over {self.base.name}>"


def free_module(base: FiniteRing, n: int, spec: ModuleSpec | None = None) -> FiniteModule:
    """Free module base^n; coordinates indexed big-endian (first coord major)."""
    if n < 1:
        raise RingBuildError(f"free module rank must be >= 1, got {n}")
    if base.order > TABLE_LIMIT:
        raise RingBuildError("free modules need a table-backed base ring")
    if base.order**n > MODULE_LIMIT:
        raise RingBuildError(f"module order {base.order ** n} above bound {MODULE_LIMIT}")
    m = base.order
    order = m**n
    idx = np.arange(order, dtype=np.int64)
    weights = [m ** (n - 1 - i) for i in range(n)]
    madd = np.zeros((order, order), dtype=np.int64)
    act = np.zeros((base.order, order), dtype=np.int64)
    mneg = np.zeros(order, dtype=np.int64)
    a_all = np.arange(base.order, dtype=np.int64)
    for w in weights:
        d = (idx // w) % m
        madd += base.add_arr(d[:, None], d[None, :]) * w
        mneg += base.neg_arr(d) * w
        act += base.mul_arr(a_all[:, None], d[None, :]) * w

    def encode(lit):
        if n == 1 and not isinstance(lit, tuple):
            lit = (lit,)
        if not isinstance(lit, tuple) or len(lit) != n:
            raise RingBuildError(f"free module elements are {n}-tuples, got {render_literal(lit)}")
        return sum(base.encode_literal(c) * w for c, w in zip(lit, weights))

    def decode(i):
        coords = tuple(base.decode_literal((i // w) % m) for w in weights)
        return coords[0] if n == 1 else coords

    if spec is None:
        spec = ModuleSpec("free", (n,), (base.spec,))
    return FiniteModule(base, madd, mneg, act, spec, encode, decode)


def module_sum(e: FiniteModule, f: FiniteModule, spec: ModuleSpec | None = None) -> FiniteModule:
    """Direct sum of two modules over the same base ring."""
    if e.base is not f.base:
        raise RingBuildError("module sum needs a common base ring")
    m = f.order
    order = e.order * m
    idx = np.arange(order, dtype=np.int64)
    hi, lo = idx // m, idx % m
    madd = e.madd_arr(hi[:, None], hi[None, :]) * m + f.madd_arr(lo[:, None], lo[None, :])
    mneg = e.mneg_arr(hi) * m + f.mneg_arr(lo)
    a_all = np.arange(e.base.order, dtype=np.int64)
    act = e.act_arr(a_all[:, None], hi[None, :]) * m + f.act_arr(a_all[:, None], lo[None, :])

    def encode(lit):
        if not isinstance(lit, tuple) or len(lit) != 2:
            raise RingBuildError(f"sum module elements are pairs, got {render_literal(lit)}")
        return e.encode_literal(lit[0]) * m + f.encode_literal(lit[1])

    def decode(i):
        return (e.decode_literal(i // m), f.decode_literal(i % m))

    if spec is None:
        spec = ModuleSpec("sum", (), (e.spec, f.spec))
    return FiniteModule(e.base, madd, mneg, act, spec, encode, decode)


def zero_module(base: FiniteRing) -> FiniteModule:
    """The zero module; trivial extension by it reproduces the base ring."""
    one = np.zeros((1, 1), dtype=np.int64)
    return FiniteModule(base, one, np.zeros(1, dtype=np.int64),
                        np.zeros((base.order, 1), dtype=np.int64),
                        ModuleSpec("zero", (), (base.spec,)),
                        lambda lit: 0, lambda i: 0)


class TrivialExtensionRing(FiniteRing):
    """Trivial extension of A by E: pairs (a,e) with (a,e)(a',e') = (aa', ae'+a'e).

    Index layout is a*|E| + e, so the square-zero ideal 0xE occupies the
    contiguous index block 0..|E|-1.
    """

    def __init__(self, base: FiniteRing, module: FiniteModule, spec: RingSpec | None = None):
        if module.base is not base:
            raise RingBuildError("trivial extension needs a module over the given ring")
        self.base_ring = base
        self.ext_module = module
        self._m = module.order
        if spec is None:
            spec = RingSpec("trivext", (), (base.spec, module.spec))
        super().__init__(base.order * module.order, base.one * module.order, spec)

    def _add_impl(self, a, b):
        m = self._m
        return self.base_ring.add_arr(a // m, b // m) * m + \
            self.ext_module.madd_arr(a % m, b % m)

    def _mul_impl(self, a, b):
        m = self._m
        aa, ae = a // m, a % m
        ba, be = b // m, b % m
        e = self.ext_module.madd_arr(self.ext_module.act_arr(aa, be),
                                     self.ext_module.act_arr(ba, ae))
        return self.base_ring.mul_arr(aa, ba) * m + e

    def _neg_impl(self, a):
        m = self._m
        return self.base_ring.neg_arr(a // m) * m + self.ext_module.mneg_arr(a % m)

    def encode_literal(self, lit) -> int:
        if not isinstance(lit, tuple) or len(lit) != 2:
            raise RingBuildError(f"{self.name} elements are pairs, got {render_literal(lit)}")
        return self.base_ring.encode_literal(lit[0]) * self._m + \
            self.ext_module.encode_literal(lit[1])

    def decode_literal(self, i: int):
        return (self.base_ring.decode_literal(i // self._m),
                self.ext_module.decode_literal(i % self._m))


class RingHom:
    """Ring homomorphism as an index map between two finite rings."""

    def __init__(self, source: FiniteRing, target: FiniteRing, index_map: np.ndarray):
        self.source = source
        self.target = target
        self.map = np.asarray(index_map, dtype=np.int64)
        if self.map.shape != (source.order,):
            raise RingBuildError("hom map must cover every source element")

    def __call__(self, i: int) -> int:
        return int(self.map[i])

    def apply_arr(self, a):
        return self.map[a]

    def kernel_indices(self) -> np.ndarray:
        return np.nonzero(self.map == self.target.zero)[0]

    def verify(self, exhaustive_limit: int = TABLE_LIMIT) -> bool:
        """Check hom laws; exhaustive over pairs when the source is small,
        otherwise over a deterministic stride sample of rows."""
        m = self.map
        src, tgt = self.source, self.target
        if m[src.zero] != tgt.zero or m[src.one] != tgt.one:
            return False
        n = src.order
        rows = np.arange(n) if n <= exhaustive_limit else np.arange(0, n, max(1, n // 512))
        cols = np.arange(n, dtype=np.int64)
        for a in rows:
            if not np.array_equal(m[src.add_arr(a, cols)], tgt.add_arr(m[a], m[cols])):
                return False
            if not np.array_equal(m[src.mul_arr(a, cols)], tgt.mul_arr(m[a], m[cols])):
                return False
        return True


def make_trivial_extension(base: FiniteRing, module: FiniteModule,
                           spec: RingSpec | None = None
                           ) -> tuple[TrivialExtensionRing, RingHom, RingHom]:
    """Trivial extension plus the embedding a -> (a,0) and projection (a,e) -> a."""
    ring = TrivialExtensionRing(base, module, spec)
    m = module.order
    embed = RingHom(base, ring, np.arange(base.order, dtype=np.int64) * m)
    project = RingHom(ring, base, np.arange(ring.order, dtype=np.int64) // m)
    return ring, embed, project


def element_kind(ring: FiniteRing, a: int) -> str:
    """Classify a as 'unit' or 'zerodivisor' by exhaustive scan (0 counts as
    a zerodivisor).  In a finite commutative ring exactly one case holds."""
    row = ring.mul_arr(a, np.arange(ring.order, dtype=np.int64))
    if bool((row == ring.one).any()):
        return "unit"
    if a == ring.zero or bool((row[1:] == ring.zero).any()):
        return "zerodivisor"
    raise ConsistencyError(f"element {a} of {ring.name} is neither unit nor zerodivisor")


def element_units(ring: FiniteRing) -> np.ndarray:
    """Boolean unit mask for all elements, cached on the ring."""
    cached = ring._cache.get("units")
    if cached is not None:
        return cached
    n = ring.order
    cols = np.arange(n, dtype=np.int64)
    units = np.zeros(n, dtype=bool)
    block = max(1, min(n, 2**22 // max(n, 1)))
    for start in range(0, n, block):
        rows = np.arange(start, min(start + block, n), dtype=np.int64)
        prods = ring.mul_arr(rows[:, None], cols[None, :])
        units[rows] = (prods == ring.one).any(axis=1)
    ring._cache["units"] = units
    return units


def is_regular_element(ring: FiniteRing, a: int) -> bool:
    """Regular = not a zerodivisor; at finite order that means unit."""
    return element_kind(ring, a) == "unit"


def verify_ring_axioms(ring: FiniteRing, triple_limit: int = 64) -> bool:
    """Exhaustively verify the commutative-ring axioms.

    Pairwise laws are checked over all pairs; the associativity and
    distributivity triples run over all order^3 combinations when
    order <= triple_limit and raise otherwise.
    """
    n = ring.order
    if n > triple_limit:
        raise BoundExceededError(
            f"axiom verification is cubic; {ring.name} has order {n} > {triple_limit}")
    idx = np.arange(n, dtype=np.int64)
    a = idx[:, None, None]
    b = idx[None, :, None]
    c = idx[None, None, :]
    add, mul = ring.add_arr, ring.mul_arr
    pair_a, pair_b = idx[:, None], idx[None, :]
    checks = [
        (add(pair_a, pair_b) == add(pair_b, pair_a), "addition commutes"),
        (mul(pair_a, pair_b) == mul(pair_b, pair_a), "multiplication commutes"),
        (add(idx, ring.zero) == idx, "0 is additive identity"),
        (add(idx, ring.neg_arr(idx)) == ring.zero, "negation inverts"),
        (mul(idx, ring.one) == idx, "1 is multiplicative identity"),
        (add(add(a, b), c) == add(a, add(b, c)), "addition associates"),
        (mul(mul(a, b), c) == mul(a, mul(b, c)), "multiplication associates"),
        (mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "multiplication distributes"),
    ]
    for ok, law in checks:
        if not bool(np.all(ok)):
            raise ConsistencyError(f"{ring.name}: ring axiom failed: {law}")
    return True


def verify_module_axioms(module: FiniteModule, triple_limit: int = 64) -> bool:
    """Exhaustively verify the module axioms over all index combinations."""
    base = module.base
    if max(base.order, module.order) > triple_limit:
        raise BoundExceededError(
            f"axiom verification is cubic; {module.name} is above {triple_limit}")
    e = np.arange(module.order, dtype=np.int64)
    a = np.arange(base.order, dtype=np.int64)
    madd, act = module.madd_arr, module.act_arr
    ee, ff = e[:, None], e[None, :]
    aa = a[:, None, None]
    bb = a[None, :, None]
    e3 = e[None, None, :]
    checks = [
        (madd(ee, ff) == madd(ff, ee), "addition commutes"),
        (madd(e, module.mzero) == e, "0 is additive identity"),
        (madd(e, module.mneg_arr(e)) == module.mzero, "negation inverts"),
        (act(base.one, e) == e, "1 acts as identity"),
        (madd(madd(e[:, None, None], e[None, :, None]), e[None, None, :])
         == madd(e[:, None, None], madd(e[None, :, None], e[None, None, :])),
         "addition associates"),
        (act(base.mul_arr(aa, bb), e3) == act(aa, act(bb, e3)), "action associates"),
        (act(base.add_arr(aa, bb), e3) == madd(act(aa, e3), act(bb, e3)),
         "action distributes over ring addition"),
        (act(a[:, None, None], madd(e[None, :, None], e[None, None, :]))
         == madd(act(a[:, None, None], e[None, :, None]),
                 act(a[:, None, None], e[None, None, :])),
         "action distributes over module addition"),
    ]
    for ok, law in checks:
        if not bool(np.all(ok)):
            raise ConsistencyError(f"{module.name}: module axiom failed: {law}")
    return True
