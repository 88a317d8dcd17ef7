#pragma once

#include <string>

#include "qhopf/fock.hpp"
#include "qhopf/hall.hpp"
#include "qhopf/poly.hpp"
#include "qhopf/young.hpp"

namespace qhopf {

// Text syntax: variables t[i,n], L[i,n], Y[i,n], integer coefficients,
// ^ exponents, e.g. "t[1,0]*t[1,1] - t[2,1]". print/parse round-trip exactly.
std::string print_poly(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& text, int modulus = 0);

std::string print_monomial(const Monomial& m);

// Tensor terms are written "a # b".
std::string print_tensor(const TensorPoly& t);
TensorPoly parse_tensor(const std::string& text, int modulus = 0);

// A-set literals: {(tail:length),...}; Hall elements are integer combinations.
std::string print_aset(const ASet& s);
std::string print_hall(const HallElement& h);
ASet parse_aset(const std::string& text, int quiver_l);
HallElement parse_hall(const std::string& text, int quiver_l);

// Partitions as [4,2,2,1]; [] is the empty partition.
std::string print_partition(const Partition& p);
Partition parse_partition(const std::string& text);

// Diagrams as (row,column,multiplicity) triples in row-major order.
std::string print_sdiagram(const SDiagram& d);
std::string print_folded(const FoldedDiagram& d);

// Fock vectors: integer/rational combinations of |[lam1];[lam2];...>.
std::string print_fock(const FockVector& v);
FockVector parse_fock(const std::string& text);

std::string print_series(const Series& s);

}  // namespace qhopf
