#include "leolab/dfs_basis.hpp"

#include <stdexcept>

namespace leolab {

std::string_view to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::Identity: return "identity";
    case ErrorClass::Logical: return "logical";
    case ErrorClass::OrthoLogical: return "ortho-logical";
    case ErrorClass::Collective: return "collective";
    case ErrorClass::Stabilizer: return "stabilizer";
    case ErrorClass::OrthoAnnihilator: return "ortho-annihilator";
    case ErrorClass::LogicalCollectiveProduct: return "logical-collective-product";
    case ErrorClass::Leakage: return "leakage";
  }
  return "?";
}

const BasisElement* DfsBasis::find(std::string_view name) const {
  for (const BasisElement& e : elements)
    if (e.name == name) return &e;
  return nullptr;
}

cplx DfsBasis::coefficient(std::string_view name, const Operator& op) const {
  const BasisElement* e = find(name);
  if (e == nullptr)
    throw std::invalid_argument("DfsBasis: no element named '" + std::string(name) + "'");
  return hs_inner(e->op, op) / (e->hs_norm * e->hs_norm);
}

Classification classify(const Operator& op, const DfsBasis& basis, double tol) {
  if (tol < 0.0) tol = default_tolerance();
  if (op.dim() != basis.partition.total_dim)
    throw std::invalid_argument("classify: operator dim " + std::to_string(op.dim()) +
                                " does not match basis dim " +
                                std::to_string(basis.partition.total_dim));
  Classification out;
  out.coefficients.reserve(basis.elements.size());
  Operator recon(op.dim());
  for (const BasisElement& e : basis.elements) {
    const cplx c = hs_inner(e.op, op) / (e.hs_norm * e.hs_norm);
    out.coefficients.push_back(c);
    if (std::abs(c) * e.hs_norm > tol) out.summary.insert(e.cls);
    if (c != cplx(0.0, 0.0)) recon += e.op * c;
  }
  out.residual = (op - recon).frobenius_norm();
  return out;
}

Operator tilde_product(const std::string& codes) {
  Operator result(1);
  result(0, 0) = 1.0;
  for (char c : codes) {
    Operator f(2);
    switch (c) {
      case 'I': f(0, 0) = 1.0; f(1, 1) = 1.0; break;
      case 'X': f(0, 1) = 1.0; f(1, 0) = 1.0; break;
      case 'Y': f(0, 1) = cplx(0.0, -1.0); f(1, 0) = cplx(0.0, 1.0); break;
      case 'Z': f(0, 0) = 1.0; f(1, 1) = -1.0; break;
      case '+': f(0, 0) = 2.0; break;
      case '-': f(1, 1) = 2.0; break;
      case 'p': f(0, 0) = 1.0; break;
      case 'q': f(1, 1) = 1.0; break;
      default:
        throw std::invalid_argument(std::string("tilde_product: bad factor '") + c + "'");
    }
    result = kron(result, f);
  }
  return result;
}

std::string tilde_name(const std::string& codes) {
  std::string out;
  for (char c : codes) {
    switch (c) {
      case '+': out += "(I+Z)"; break;
      case '-': out += "(I-Z)"; break;
      case 'p': out += "(I+Z)/2"; break;
      case 'q': out += "(I-Z)/2"; break;
      default: out += c; break;
    }
  }
  return out;
}

}  // namespace leolab
