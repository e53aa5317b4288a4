"""Finite groups as Cayley tables."""
import json
from collections import deque

import numpy as np

from algebra.exactnum import DEFAULT_ORDER
from algebra.polyfunc import PolyMatrix, RatFunc
from errors import BoundExceeded, InvalidGroup

MAX_GROUP_ORDER = 64


def validate_group(table):
    """List the group-axiom violations of a raw Cayley table (empty list: valid).

    Index 0 must be the identity.
    """
    try:
        t = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError):
        return ['table is not a rectangular grid of integers']
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        return ['table must be a non-empty square grid, got shape {}'.format(t.shape)]
    n = t.shape[0]
    if n > MAX_GROUP_ORDER:
        return ['order {} exceeds the supported maximum {}'.format(n, MAX_GROUP_ORDER)]
    if t.min() < 0 or t.max() >= n:
        return ['entries must lie in 0..{}'.format(n - 1)]
    violations = []
    ident = np.arange(n)
    if not np.array_equal(t[0], ident):
        violations.append('row 0 is not the identity row')
    if not np.array_equal(t[:, 0], ident):
        violations.append('column 0 is not the identity column')
    sorted_rows = np.sort(t, axis=1)
    for i in np.nonzero((sorted_rows != ident).any(axis=1))[0]:
        violations.append('row {} is not a permutation (Latin square violated)'.format(i))
    sorted_cols = np.sort(t, axis=0)
    for j in np.nonzero((sorted_cols != ident[:, None]).any(axis=0))[0]:
        violations.append('column {} is not a permutation (Latin square violated)'.format(j))
    for i in np.nonzero(~(t == 0).any(axis=1))[0]:
        violations.append('element {} has no right inverse'.format(i))
    if not violations:
        # (ij)k against i(jk) for every triple
        bad = np.argwhere(t[t, :] != t[:, t])
        for i, j, k in bad[:5]:
            violations.append('associativity fails for ({}, {}, {})'.format(i, j, k))
        if len(bad) > 5:
            violations.append('... {} associativity failures in total'.format(len(bad)))
    return violations


class Group(object):
    """Finite group given by its Cayley table; element 0 is the identity.

    Args:
        names (sequence of str): element names, identity first.
        table (array-like): table[i][j] is the index of names[i]*names[j].
    """
    def __init__(self, names, table, validate=True):
        table = np.array(table, dtype=np.int64)
        if validate:
            violations = validate_group(table)
            if violations:
                raise InvalidGroup(violations)
        if len(names) != table.shape[0]:
            raise InvalidGroup(['{} names for a table of order {}'.format(len(names), table.shape[0])])
        table.setflags(write=False)
        self.names = tuple(str(n) for n in names)
        self.table = table
        inverse = np.argmax(table == 0, axis=1)
        inverse.setflags(write=False)
        self.inverse = inverse
        self._index = {name: i for i, name in enumerate(self.names)}

    @property
    def order(self):
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def mul(self, i, j):
        return int(self.table[i, j])

    def inv(self, i):
        return int(self.inverse[i])

    def index(self, name):
        return self._index[name]

    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def element_order(self, i):
        n, x = 1, i
        while x != 0:
            x = self.mul(x, i)
            n += 1
        return n

    def exponent(self):
        result = 1
        for i in range(self.order):
            result = np.lcm(result, self.element_order(i))
        return int(result)

    def relabel(self, order):
        """Same group with elements listed in the given order (identity stays first)."""
        order = list(order)
        if sorted(order) != list(range(self.order)) or order[0] != 0:
            raise ValueError('relabeling must be a permutation fixing the identity')
        position = np.empty(self.order, dtype=np.int64)
        position[order] = np.arange(self.order)
        table = position[self.table[np.ix_(order, order)]]
        return Group([self.names[i] for i in order], table)

    def to_json(self):
        return {'order': self.order, 'names': list(self.names), 'table': self.table.tolist()}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        group = cls(data['names'], data['table'])
        if group.order != data.get('order', group.order):
            raise InvalidGroup(['declared order {} does not match the table'.format(data['order'])])
        return group

    def __eq__(self, other):
        if not isinstance(other, Group):
            return NotImplemented
        return self.names == other.names and np.array_equal(self.table, other.table)

    __hash__ = None

    def __repr__(self):
        return 'Group(order={}, names={})'.format(self.order, list(self.names))


def cyclic_group(n):
    if n < 1:
        raise ValueError('cyclic group order must be positive')
    names = ['e', 's'] + ['s{}'.format(k) for k in range(2, n)]
    idx = np.arange(n)
    return Group(names[:n], (idx[:, None] + idx[None, :]) % n)


def klein_four_group():
    return Group(['e', 'x', 'y', 'xy'], [[i ^ j for j in range(4)] for i in range(4)])


def symmetric_group_s3():
    """S3 as permutations of {0,1,2}; r is a 3-cycle, s a transposition."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (0, 2, 1)]
    names = ['e', 'r', 'r2', 's', 'sr', 'sr2']

    def compose(p, q):
        return tuple(p[q[i]] for i in range(3))
    table = [[perms.index(compose(p, q)) for q in perms] for p in perms]
    return Group(names, table)


# unit quaternion products: (sign, unit)
_QUATERNION_UNITS = {
    ('1', '1'): (1, '1'), ('1', 'i'): (1, 'i'), ('1', 'j'): (1, 'j'), ('1', 'k'): (1, 'k'),
    ('i', '1'): (1, 'i'), ('i', 'i'): (-1, '1'), ('i', 'j'): (1, 'k'), ('i', 'k'): (-1, 'j'),
    ('j', '1'): (1, 'j'), ('j', 'i'): (-1, 'k'), ('j', 'j'): (-1, '1'), ('j', 'k'): (1, 'i'),
    ('k', '1'): (1, 'k'), ('k', 'i'): (1, 'j'), ('k', 'j'): (-1, 'i'), ('k', 'k'): (-1, '1'),
}


def quaternion_group():
    """Q8 listed as 1, -1, i, -i, j, -j, k, -k, with quaternion multiplication."""
    elements = [(1, '1'), (-1, '1'), (1, 'i'), (-1, 'i'), (1, 'j'), (-1, 'j'), (1, 'k'), (-1, 'k')]
    names = ['1', '-1', 'i', '-i', 'j', '-j', 'k', '-k']

    def qmul(p, q):
        sign, unit = _QUATERNION_UNITS[(p[1], q[1])]
        return (p[0] * q[0] * sign, unit)
    table = [[elements.index(qmul(x, y)) for y in elements] for x in elements]
    return Group(names, table)


def direct_product(g, h):
    """G x H with (g1,h1)(g2,h2) = (g1g2, h1h2), indexed g*|H| + h."""
    m = h.order
    names = []
    for a in g.names:
        for b in h.names:
            names.append('e' if a == b == 'e' else '({},{})'.format(a, b))
    gi = np.repeat(np.arange(g.order), m)
    hi = np.tile(np.arange(m), g.order)
    table = g.table[gi[:, None], gi[None, :]] * m + h.table[hi[:, None], hi[None, :]]
    return Group(names, table)


def make_group(kind):
    """Group by name: c<n>, klein4, s3, q8, or an x-joined product such as c2xc2.

    A Group instance is returned unchanged.
    """
    if isinstance(kind, Group):
        return kind
    name = kind.strip().lower()
    if 'x' in name and name != 'klein4':
        parts = [make_group(p) for p in name.split('x')]
        group = parts[0]
        for part in parts[1:]:
            group = direct_product(group, part)
        return group
    if name == 'klein4':
        return klein_four_group()
    if name == 's3':
        return symmetric_group_s3()
    if name == 'q8':
        return quaternion_group()
    if name.startswith('c') and name[1:].isdigit():
        n = int(name[1:])
        if not 1 <= n <= MAX_GROUP_ORDER:
            raise ValueError('cyclic order must lie in 1..{}'.format(MAX_GROUP_ORDER))
        return cyclic_group(n)
    raise ValueError('unknown group {!r}'.format(kind))


def close_generators(mul, gens, bound=MAX_GROUP_ORDER, identity=None, name=str):
    """Breadth-first closure of hashable generators under mul.

    Args:
        mul (callable): associative product of two elements.
        gens (list): generators.
        bound (int): give up once more than this many elements appear.
        identity: the identity element; found from the first generator if None.
        name (callable): element -> display name.

    Returns:
        (Group, elements) with elements in discovery order, identity first.
    """
    if bound < 1:
        raise ValueError('bound must be at least 1')
    gens = list(gens)
    if identity is None:
        if not gens:
            raise ValueError('need an identity or at least one generator')
        power, steps = gens[0], 1
        while True:
            nxt = mul(power, gens[0])
            if nxt == gens[0]:
                identity = power
                break
            power, steps = nxt, steps + 1
            if steps > bound:
                raise BoundExceeded(bound)
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = mul(x, s)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                if len(elements) > bound:
                    raise BoundExceeded(bound)
                queue.append(y)
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            product = mul(a, b)
            if product not in index:
                raise BoundExceeded(bound)
            table[i, j] = index[product]
    return Group([name(x) for x in elements], table), elements


class CoeffVector(object):
    """Values indexed by the elements of a group (group-ring element).

    Args:
        group (Group): indexing group.
        values (sequence): one entry per element, coerced to RatFunc.
    """
    def __init__(self, group, values, order=DEFAULT_ORDER):
        values = tuple(RatFunc.coerce(v, order) for v in values)
        if len(values) != group.order:
            raise ValueError('{} values for a group of order {}'.format(len(values), group.order))
        self.group = group
        self.values = values
        self.order = order

    @classmethod
    def symbolic(cls, group, names, order=DEFAULT_ORDER):
        return cls(group, [RatFunc.variable(n, order) for n in names], order)

    @classmethod
    def constant(cls, group, numbers, order=DEFAULT_ORDER):
        return cls(group, list(numbers), order)

    @classmethod
    def delta(cls, group, order=DEFAULT_ORDER):
        return cls(group, [1] + [0] * (group.order - 1), order)

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, CoeffVector):
            return NotImplemented
        return self.values == other.values

    __hash__ = None

    def __str__(self):
        return '({})'.format(', '.join(str(v) for v in self.values))


def regular_matrix(group, a, transpose=False):
    """|G| x |G| matrix with (s, t) entry a[s^-1 t], or a[s t^-1] when transpose."""
    n = group.order
    rows = []
    for s in range(n):
        if transpose:
            rows.append([a[group.mul(s, group.inv(t))] for t in range(n)])
        else:
            rows.append([a[group.mul(group.inv(s), t)] for t in range(n)])
    return PolyMatrix(rows, a.order)
