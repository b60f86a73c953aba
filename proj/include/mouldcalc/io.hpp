#ifndef MOULDCALC_IO_HPP
#define MOULDCALC_IO_HPP

#include <iosfwd>
#include <string>

#include "mouldcalc/hamiltonian.hpp"
#include "mouldcalc/kolmogorov.hpp"
#include "mouldcalc/operator.hpp"

namespace mouldcalc {

// Vector-field file:
//   field
//   dim 2
//   cutoff 5
//   lambda 1 5/7
//   term <coeff> <e1> ... <e_dim> <axis>     (axis is 1-based)
//   end
struct FieldInput {
    int dim = 0;
    int cutoff = 0;
    std::vector<Poly> components;
};

FieldInput parseFieldText(const std::string& text);
std::string writeFieldText(const std::vector<Poly>& components);

// Hamiltonian file:
//   hamiltonian
//   dof 2
//   cutoff 6
//   lambda 1 -1
//   term <n1> ... <n_dof> | <m1> ... <m_dof> <coeff>
//   end
CartesianHamiltonian parseHamiltonianText(const std::string& text);
std::string writeHamiltonianText(const CartesianHamiltonian& h);

// Kolmogorov job file:
//   kolmogorov
//   dof 1
//   omega 1
//   fterm <k1> ... <k_dof> <coeff>
//   maxorder 3
//   targetorder 2
//   end
struct KolmogorovInput {
    int dof = 0;
    std::vector<Scalar> omega;
    TrigPoly f;
    int maxOrder = 0;
    int targetOrder = 0;
};

KolmogorovInput parseKolmogorovText(const std::string& text);
std::string writeKolmogorovText(const KolmogorovInput& in);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

}  // namespace mouldcalc

#endif
