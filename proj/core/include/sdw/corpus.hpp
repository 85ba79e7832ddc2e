#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sdw/algebra.hpp"

namespace sdw::corpus {

/// Builders for the small algebras used throughout the test corpus and the
/// shipped data files. Groups share the signature (mul, inv, e); rings share
/// (add, neg, zero, mul); lattices share (meet, join).

AlgebraPtr make_group(const std::string& name, int n, const std::function<El(El, El)>& mul);

AlgebraPtr cyclic_group(int n);                ///< Z_n, (mul, inv, e)
AlgebraPtr cyclic_group_no_inverse(int n);     ///< Z_n with signature (add, zero)
AlgebraPtr klein_group();                      ///< V4 = Z2 x Z2
AlgebraPtr symmetric3();                       ///< S3 on {0..5}
AlgebraPtr dihedral4();                        ///< D4, order 8
AlgebraPtr quaternion8();                      ///< Q8
AlgebraPtr z4xz2();                            ///< Z4 x Z2
AlgebraPtr z2cubed();                          ///< Z2^3

AlgebraPtr ring_zn(int n);                     ///< Z_n as a ring, (add, neg, zero, mul)
AlgebraPtr ring_z2xz2();                       ///< Z2 x Z2 product ring
AlgebraPtr ring_ut2_z2();                      ///< upper-triangular 2x2 matrices over Z2

AlgebraPtr two_chain_lattice();                ///< ({0,1}, meet, join)
AlgebraPtr meet_semilattice2();                ///< ({0,1}, meet)
AlgebraPtr diamond_m3();                       ///< 0 < a,b,c < 1 (indices 0,1,2,3,4)
AlgebraPtr pentagon_n5();                      ///< the pentagon as a lattice algebra
AlgebraPtr bool_and_monoid();                  ///< ({0,1}, mul = and, e = 1)

/// All groups of the corpus with carrier size <= 8 (nontrivial).
std::vector<AlgebraPtr> small_groups();
/// The ring corpus: Z4, Z8, Z2xZ2, upper-triangular 2x2 over Z2.
std::vector<AlgebraPtr> small_rings();

/// Index of the even permutations of S3 as built by symmetric3().
std::vector<El> s3_even_permutations();
/// Sign (0 = even, 1 = odd) of each element of symmetric3().
std::vector<int> s3_signs();

}  // namespace sdw::corpus
