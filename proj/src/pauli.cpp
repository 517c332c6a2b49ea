#include "leolab/pauli.hpp"

#include <stdexcept>

namespace leolab {

namespace {

void check_factors(int n, const std::string& f) {
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("pauli: string length " + std::to_string(f.size()) +
                                " does not match qubit count " + std::to_string(n));
  for (char c : f)
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
      throw std::invalid_argument(std::string("pauli: invalid factor '") + c + "'");
}

}  // namespace

Operator pauli_matrix(Axis axis) {
  Operator m(2);
  switch (axis) {
    case Axis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      return m.set_label("X");
    case Axis::Y:
      m(0, 1) = cplx(0.0, -1.0);
      m(1, 0) = cplx(0.0, 1.0);
      return m.set_label("Y");
    case Axis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      return m.set_label("Z");
  }
  throw std::logic_error("pauli_matrix: bad axis");
}

// A Pauli string is a generalized permutation: basis state |col> maps to
// phase(col) * |col ^ xmask|>, where X and Y flip a bit and Y, Z carry
// bit-dependent phases. Only 2^n entries are nonzero.
Operator pauli(int n, const std::string& factors, cplx coefficient) {
  check_factors(n, factors);
  const int dim = 1 << n;
  Operator op(dim, factors);

  unsigned xmask = 0;
  for (int q = 0; q < n; ++q) {
    char c = factors[q];
    if (c == 'X' || c == 'Y') xmask |= 1u << (n - 1 - q);  // qubit 1 = MSB
  }

  for (unsigned col = 0; col < static_cast<unsigned>(dim); ++col) {
    cplx phase = coefficient;
    for (int q = 0; q < n; ++q) {
      const unsigned bit = (col >> (n - 1 - q)) & 1u;
      switch (factors[q]) {
        case 'Y':
          // Y|0> = i|1>, Y|1> = -i|0>
          phase *= bit ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
          break;
        case 'Z':
          if (bit) phase = -phase;
          break;
        default:
          break;
      }
    }
    op(static_cast<int>(col ^ xmask), static_cast<int>(col)) = phase;
  }
  return op;
}

Operator pauli(int n, const PauliString& s) {
  return pauli(n, s.factors, s.coefficient);
}

OperatorSum& OperatorSum::add(cplx coefficient, std::string factors) {
  if (!terms.empty() && factors.size() != terms.front().factors.size())
    throw std::invalid_argument("OperatorSum: mixed qubit counts");
  terms.push_back({std::move(factors), coefficient});
  return *this;
}

int OperatorSum::qubit_count() const {
  return terms.empty() ? 0 : terms.front().qubit_count();
}

Operator OperatorSum::to_operator() const {
  if (terms.empty()) throw std::invalid_argument("OperatorSum: empty sum");
  const int n = qubit_count();
  Operator acc(1 << n);
  for (const PauliString& t : terms) acc += pauli(n, t);
  return acc;
}

Operator exchange(int n, int i, int j) {
  if (i < 1 || j <= i || j > n)
    throw std::invalid_argument("exchange: need 1 <= i < j <= n, got i=" +
                                std::to_string(i) + " j=" + std::to_string(j) +
                                " n=" + std::to_string(n));
  const int dim = 1 << n;
  const int bi = n - i, bj = n - j;  // bit positions (qubit 1 = MSB)
  Operator op(dim, "E" + std::to_string(i) + std::to_string(j));
  for (int r = 0; r < dim; ++r) {
    const int vi = (r >> bi) & 1, vj = (r >> bj) & 1;
    int c = r & ~((1 << bi) | (1 << bj));
    c |= (vj << bi) | (vi << bj);
    op(c, r) = 1.0;
  }
  return op;
}

Operator collective(int n, Axis axis) {
  const char sym = axis == Axis::X ? 'X' : axis == Axis::Y ? 'Y' : 'Z';
  OperatorSum sum;
  for (int q = 0; q < n; ++q) {
    std::string f(static_cast<std::size_t>(n), 'I');
    f[q] = sym;
    sum.add(1.0, f);
  }
  return sum.to_operator().set_label(std::string("S_") + sym);
}

Operator total_spin_squared(int n) {
  Operator acc((1 << n));
  for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
    Operator s = collective(n, ax);
    acc += s * s;
  }
  return (acc * 0.25).set_label("S^2");
}

}  // namespace leolab
