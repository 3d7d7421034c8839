#pragma once

#include <map>

namespace clusterforge {

enum class Pauli { I, X, Y, Z };

// Tensor product of single-qubit Pauli operators with an overall sign.
// Qubits absent from `factors` carry the identity.
struct PauliString {
  std::map<int, Pauli> factors;
  int sign = +1;
};

}  // namespace clusterforge
