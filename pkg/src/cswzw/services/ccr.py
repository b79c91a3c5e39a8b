"""
CCR dg-*-algebras over finite generator sets.

Elements are finite combinations of normal-ordered words: generator indices
in non-decreasing order, with no odd generator repeated. Products are
brought to normal order with the relations

    x_j x_i = (-1)^{|x_i||x_j|} x_i x_j + i tau(x_j, x_i)      (j > i)
    x x     = (i/2) tau(x, x)                                  (x odd)
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from cswzw.models.arithmetic import Arithmetic
from cswzw.models.complexes import ComplexId, HomCochain
from cswzw.models.form import Form
from cswzw.models.report import CheckRecord
from cswzw.services.homotopy import complex_differential, exact_rank, form_coordinates, span_solve
from cswzw.utils import errors

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


class StarConvention(Enum):
    KOSZUL = 'koszul'  # (ab)* = (-1)^{|a||b|} b* a*
    PLAIN = 'plain'    # (ab)* = b* a*


class RewriteStrategy(Enum):
    FIRST = 'first'  # leftmost descent first
    LAST = 'last'    # rightmost descent first


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    labels: Tuple[str, ...]
    forms: Tuple[Form, ...]
    degrees: Tuple[int, ...]
    pairing: Tuple[Tuple[object, ...], ...]
    arithmetic: Arithmetic = Arithmetic.exact()
    d_matrix: Optional[Tuple[Tuple[Tuple[int, object], ...], ...]] = None
    complex_id: Optional[ComplexId] = None
    star_convention: StarConvention = StarConvention.KOSZUL
    _cache: Dict = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, labels: Sequence[str], forms: Sequence[Form], pairing_fn: Callable[[Form, Form], object],
              arithmetic: Arithmetic = None, complex_id: ComplexId = None,
              star_convention: StarConvention = StarConvention.KOSZUL,
              require_differential: bool = True) -> 'GeneratorSet':
        arithmetic = arithmetic or Arithmetic.exact()
        seen = set()
        for label in labels:
            if label in seen:
                raise errors.WorkbenchError(errors.DUPLICATE_LABEL.format(label=label))
            seen.add(label)
        degrees = tuple(form.cdeg for form in forms)
        matrix = tuple(tuple(pairing_fn(a, b) for b in forms) for a in forms)
        for i, a in enumerate(degrees):
            for j, b in enumerate(degrees):
                total = matrix[i][j] + _sign(a * b) * matrix[j][i]
                if not arithmetic.is_zero(total):
                    raise errors.ConsistencyError(errors.INTERNAL_CONSISTENCY_ERROR.format(
                        detail=f"pairing not graded antisymmetric on ({labels[i]}, {labels[j]})"))
        d_matrix = _differential_matrix(labels, forms, complex_id, arithmetic, require_differential)
        logger.debug(f"Generator set of {len(labels)} generators, degrees {degrees}")
        return cls(tuple(labels), tuple(forms), degrees, matrix, arithmetic, d_matrix, complex_id,
                   star_convention)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def tau(self, i: int, j: int):
        return self.pairing[i][j]

    def word_degree(self, word: Word) -> int:
        return sum(self.degrees[i] for i in word)

    def is_odd(self, i: int) -> bool:
        return self.degrees[i] % 2 == 1

    def with_star(self, convention: StarConvention) -> 'GeneratorSet':
        return GeneratorSet(self.labels, self.forms, self.degrees, self.pairing, self.arithmetic,
                            self.d_matrix, self.complex_id, convention)

    def to_dict(self) -> dict:
        return {
            'labels': list(self.labels),
            'degrees': list(self.degrees),
            'pairing': [[str(v) for v in row] for row in self.pairing],
            'star': self.star_convention.value,
        }

    # ---- normal ordering ----
    def normal_form(self, word: Word, strategy: RewriteStrategy = RewriteStrategy.FIRST) -> Dict[Word, object]:
        key = (word, strategy)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        result = self._rewrite(word, strategy)
        self._cache[key] = result
        return result

    def _rewrite(self, word: Word, strategy: RewriteStrategy) -> Dict[Word, object]:
        positions = range(len(word) - 1)
        if strategy == RewriteStrategy.LAST:
            positions = reversed(positions)
        for p in positions:
            j, i = word[p], word[p + 1]
            if j > i:
                swapped = word[:p] + (i, j) + word[p + 2:]
                contracted = word[:p] + word[p + 2:]
                out: Dict[Word, object] = {}
                _accumulate(out, self.normal_form(swapped, strategy), _sign(self.degrees[i] * self.degrees[j]),
                            self.arithmetic)
                _accumulate(out, self.normal_form(contracted, strategy),
                            self.arithmetic.imaginary_unit * self.tau(j, i), self.arithmetic)
                return out
            if j == i and self.is_odd(i):
                contracted = word[:p] + word[p + 2:]
                out = {}
                half = sympy.Rational(1, 2) if self.arithmetic.is_exact else 0.5
                _accumulate(out, self.normal_form(contracted, strategy),
                            self.arithmetic.imaginary_unit * half * self.tau(i, i), self.arithmetic)
                return out
        return {word: 1}

    def is_normal(self, word: Word) -> bool:
        return all(a < b or (a == b and not self.is_odd(a)) for a, b in zip(word, word[1:]))


def _simplify(value, arithmetic: Arithmetic):
    return sympy.expand(value) if arithmetic.is_exact else value


def _accumulate(out: Dict[Word, object], terms: Dict[Word, object], factor, arithmetic: Arithmetic) -> None:
    if arithmetic.is_zero(factor):
        return
    for word, coef in terms.items():
        value = _simplify(out.get(word, 0) + coef * factor, arithmetic)
        if arithmetic.is_zero(value):
            out.pop(word, None)
        else:
            out[word] = value


def _differential_matrix(labels, forms, complex_id, arithmetic, required):
    differential = complex_differential(complex_id)
    rows = []
    for i, form in enumerate(forms):
        image = differential(form)
        if image.is_zero(arithmetic):
            rows.append(())
            continue
        basis_idx = [k for k, other in enumerate(forms)
                     if other.cdeg == image.cdeg and other.space == image.space and other.degree == image.degree]
        coefficients = span_solve([forms[k] for k in basis_idx], image, arithmetic)
        if coefficients is None:
            if required:
                raise errors.GeneratorClosureError(f"{errors.NOT_D_CLOSED}: d({labels[i]})")
            return None
        rows.append(tuple((k, c) for k, c in zip(basis_idx, coefficients) if not arithmetic.is_zero(c)))
    return tuple(rows)


@dataclass(frozen=True, eq=False)
class CCRElement:
    generators: GeneratorSet
    terms: Tuple[Tuple[Word, object], ...] = ()

    @classmethod
    def from_terms(cls, generators: GeneratorSet, terms: Iterable[Tuple[Word, object]],
                   strategy: RewriteStrategy = RewriteStrategy.FIRST) -> 'CCRElement':
        out: Dict[Word, object] = {}
        for word, coef in terms:
            _accumulate(out, generators.normal_form(tuple(word), strategy), coef, generators.arithmetic)
        return cls(generators, tuple(sorted(out.items(), key=lambda item: (len(item[0]), item[0]))))

    @classmethod
    def one(cls, generators: GeneratorSet) -> 'CCRElement':
        return cls.from_terms(generators, [((), 1)])

    @classmethod
    def zero(cls, generators: GeneratorSet) -> 'CCRElement':
        return cls(generators, ())

    @classmethod
    def generator(cls, generators: GeneratorSet, which) -> 'CCRElement':
        index = generators.index(which) if isinstance(which, str) else which
        return cls.from_terms(generators, [((index,), 1)])

    @classmethod
    def word(cls, generators: GeneratorSet, word: Word, coef=1,
             strategy: RewriteStrategy = RewriteStrategy.FIRST) -> 'CCRElement':
        return cls.from_terms(generators, [(tuple(word), coef)], strategy)

    @property
    def arithmetic(self) -> Arithmetic:
        return self.generators.arithmetic

    def as_dict(self) -> Dict[Word, object]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def scalar_part(self):
        return self.as_dict().get((), 0)

    def degrees(self) -> List[int]:
        return sorted({self.generators.word_degree(w) for w, _ in self.terms})

    def homogeneous(self, degree: int) -> 'CCRElement':
        return CCRElement(self.generators, tuple((w, c) for w, c in self.terms
                                                 if self.generators.word_degree(w) == degree))

    def _check_same(self, other: 'CCRElement') -> None:
        if self.generators is not other.generators:
            raise errors.WorkbenchError(errors.GENERATOR_SET_MISMATCH)

    def __add__(self, other: 'CCRElement') -> 'CCRElement':
        self._check_same(other)
        return CCRElement.from_terms(self.generators, list(self.terms) + list(other.terms))

    def scale(self, c) -> 'CCRElement':
        return CCRElement.from_terms(self.generators, [(w, coef * c) for w, coef in self.terms])

    def __neg__(self) -> 'CCRElement':
        return self.scale(-1)

    def __sub__(self, other: 'CCRElement') -> 'CCRElement':
        return self + (-other)

    def __mul__(self, other: 'CCRElement') -> 'CCRElement':
        return product(self, other)

    def equals(self, other: 'CCRElement') -> bool:
        return (self - other).is_zero()

    def max_coefficient(self) -> float:
        return max((self.arithmetic.magnitude(c) for _, c in self.terms), default=0.0)

    def to_dict(self) -> dict:
        return {
            'generators': list(self.generators.labels),
            'terms': [{'word': [self.generators.labels[i] for i in w], 'coefficient': str(c)}
                      for w, c in self.terms],
        }


def product(a: CCRElement, b: CCRElement, strategy: RewriteStrategy = RewriteStrategy.FIRST) -> CCRElement:
    a._check_same(b)
    terms = [(u + v, cu * cv) for u, cu in a.terms for v, cv in b.terms]
    return CCRElement.from_terms(a.generators, terms, strategy)


def _conjugate(value, arithmetic: Arithmetic):
    if arithmetic.is_exact:
        return sympy.conjugate(value)
    return complex(value).conjugate()


def _reversal_sign(generators: GeneratorSet, word: Word) -> int:
    odd = [generators.is_odd(i) for i in word]
    swaps = sum(1 for p in range(len(word)) for q in range(p + 1, len(word)) if odd[p] and odd[q])
    return _sign(swaps)


def _star_terms(generators: GeneratorSet, terms: Iterable[Tuple[Word, object]]) -> List[Tuple[Word, object]]:
    out = []
    for word, coef in terms:
        sign = _reversal_sign(generators, word) if generators.star_convention == StarConvention.KOSZUL else 1
        out.append((tuple(reversed(word)), _conjugate(coef, generators.arithmetic) * sign))
    return out


def star(a: CCRElement) -> CCRElement:
    """Conjugate-linear anti-automorphism fixing the generators."""
    return CCRElement.from_terms(a.generators, _star_terms(a.generators, a.terms))


def differential(a: CCRElement) -> CCRElement:
    """Graded derivation extending d on generators."""
    generators = a.generators
    if generators.d_matrix is None:
        raise errors.GeneratorClosureError()
    terms = []
    for word, coef in a.terms:
        prefix_degree = 0
        for p, index in enumerate(word):
            sign = _sign(prefix_degree)
            for target, c in generators.d_matrix[index]:
                terms.append((word[:p] + (target,) + word[p + 1:], coef * c * sign))
            prefix_degree += generators.degrees[index]
    return CCRElement.from_terms(generators, terms)


def commutator(a: CCRElement, b: CCRElement) -> CCRElement:
    """Graded commutator, summed over homogeneous components."""
    total = CCRElement.zero(a.generators)
    for p in a.degrees():
        for q in b.degrees():
            x, y = a.homogeneous(p), b.homogeneous(q)
            total = total + product(x, y) - product(y, x).scale(_sign(p * q))
    return total


# ---- checks ----
def _record(identity: str, sample_id: str, element: CCRElement, detail: dict = None) -> CheckRecord:
    residual = element.max_coefficient()
    return CheckRecord(identity, sample_id, residual, element.arithmetic.within_tolerance(residual), detail or {})


def check_relations(generators: GeneratorSet) -> List[CheckRecord]:
    """[x_i x_j] - (-1)^{|i||j|} [x_j x_i] = i tau(x_i, x_j) 1 for every pair."""
    records = []
    unit = CCRElement.one(generators)
    n = len(generators)
    for i in range(n):
        for j in range(n):
            xi, xj = CCRElement.generator(generators, i), CCRElement.generator(generators, j)
            lhs = product(xi, xj) - product(xj, xi).scale(_sign(generators.degrees[i] * generators.degrees[j]))
            rhs = unit.scale(generators.arithmetic.imaginary_unit * generators.tau(i, j))
            records.append(_record("CCR relation", f"{generators.labels[i]},{generators.labels[j]}", lhs - rhs))
    return records


def check_star_closure(generators: GeneratorSet) -> List[CheckRecord]:
    """
    Apply the star to each raw relation x_i x_j - (-1)^{|i||j|} x_j x_i - i tau
    and normal-order; a nonzero result means the relation ideal is not
    star-closed under the chosen convention.
    """
    arithmetic = generators.arithmetic
    records = []
    n = len(generators)
    for i in range(n):
        for j in range(i, n):
            relation = [((i, j), 1), ((j, i), -_sign(generators.degrees[i] * generators.degrees[j])),
                        ((), -arithmetic.imaginary_unit * generators.tau(i, j))]
            image = CCRElement.from_terms(generators, _star_terms(generators, relation))
            records.append(_record(f"star closure ({generators.star_convention.value})",
                                   f"{generators.labels[i]},{generators.labels[j]}", image))
    return records


def causality_check(generators: GeneratorSet, first: Sequence[int], second: Sequence[int],
                    first_region, second_region, disjoint: Callable) -> List[CheckRecord]:
    """Generators supported in disjoint regions commute in the graded sense."""
    if not disjoint(first_region, second_region):
        raise errors.PreconditionError(errors.REGIONS_NOT_DISJOINT)
    records = []
    for i in first:
        for j in second:
            bracket = commutator(CCRElement.generator(generators, i), CCRElement.generator(generators, j))
            records.append(_record("graded commutator vanishes", f"{generators.labels[i]},{generators.labels[j]}",
                                   bracket))
    return records


# ---- transport ----
def independent_images(images: Sequence[Form], labels: Sequence[str]) -> Tuple[List[str], List[Form]]:
    """A maximal linearly independent subfamily, grouped by (space, degree, shift)."""
    kept_labels, kept_forms = [], []
    for label, form in zip(labels, images):
        if form.is_zero():
            continue
        same = [f for f in kept_forms if f.space == form.space and f.degree == form.degree and f.shift == form.shift]
        keys, rows = form_coordinates(same + [form])
        if exact_rank(rows, keys) > len(same):
            kept_labels.append(label)
            kept_forms.append(form)
    return kept_labels, kept_forms


@dataclass(frozen=True, eq=False)
class Transport:
    morphism: HomCochain
    source: GeneratorSet
    target: GeneratorSet
    matrix: Tuple[Tuple[Tuple[int, object], ...], ...]

    @classmethod
    def build(cls, morphism: HomCochain, source: GeneratorSet, target: GeneratorSet) -> 'Transport':
        arithmetic = source.arithmetic
        rows = []
        for i, form in enumerate(source.forms):
            image = morphism(form)
            if image.is_zero(arithmetic):
                rows.append(())
                continue
            basis_idx = [k for k, other in enumerate(target.forms)
                         if other.space == image.space and other.degree == image.degree]
            coefficients = span_solve([target.forms[k] for k in basis_idx], image, arithmetic)
            if coefficients is None:
                raise errors.PoissonMorphismError(
                    f"{errors.NOT_A_POISSON_MORPHISM}: {morphism.name}({source.labels[i]}) outside the target span")
            rows.append(tuple((k, c) for k, c in zip(basis_idx, coefficients) if not arithmetic.is_zero(c)))
        transport = cls(morphism, source, target, tuple(rows))
        transport.check_intertwining()
        return transport

    def pulled_back_pairing(self, i: int, j: int):
        total = 0
        for k, a in self.matrix[i]:
            for m, b in self.matrix[j]:
                total = total + a * b * self.target.tau(k, m)
        return _simplify(total, self.source.arithmetic)

    def check_intertwining(self) -> None:
        arithmetic = self.source.arithmetic
        n = len(self.source)
        for i in range(n):
            for j in range(n):
                defect = self.source.tau(i, j) - self.pulled_back_pairing(i, j)
                if not arithmetic.is_zero(defect):
                    raise errors.PoissonMorphismError(
                        f"{errors.NOT_A_POISSON_MORPHISM}: pairing of ({self.source.labels[i]}, "
                        f"{self.source.labels[j]}) changes by {defect}")

    def image_of_generator(self, i: int) -> CCRElement:
        return CCRElement.from_terms(self.target, [((k,), c) for k, c in self.matrix[i]])

    def __call__(self, element: CCRElement) -> CCRElement:
        if element.generators is not self.source:
            raise errors.WorkbenchError(errors.GENERATOR_SET_MISMATCH)
        total = CCRElement.zero(self.target)
        images = [self.image_of_generator(i) for i in range(len(self.source))]
        for word, coef in element.terms:
            value = CCRElement.one(self.target)
            for index in word:
                value = product(value, images[index])
            total = total + value.scale(coef)
        return total


def identity_transport(generators: GeneratorSet) -> Transport:
    return Transport.build(HomCochain.identity(generators.complex_id), generators, generators)
