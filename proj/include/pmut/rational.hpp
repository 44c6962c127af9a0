#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pmut {

using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// "p/q" in lowest terms; integers keep the "/1" so readers see one format.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

RatVec to_rat(const IntVec& v);
RatVec to_rat(const std::vector<long>& v);
bool is_integral(const Rat& r);
bool is_integral(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);

// Scale a nonzero rational vector to the primitive integer vector with the same direction.
IntVec primitive(const RatVec& v);

Int factorial(unsigned n);

// Rank and row-echelon helpers over Q.
struct Echelon {
    std::vector<RatVec> rows;        // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each row
};
Echelon rref(std::vector<RatVec> rows);
std::size_t rank_of(const std::vector<RatVec>& rows);
// Basis of {x : <r, x> = 0 for all rows r}.
std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t ncols);
Rat determinant(std::vector<RatVec> m);

}  // namespace pmut
