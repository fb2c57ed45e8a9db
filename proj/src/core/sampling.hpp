#pragma once

#include <cstdint>
#include <random>

#include "core/antilinear.hpp"

namespace antiq {

// Complex standard Gaussian matrix.
Mat ginibre(int rows, int cols, std::mt19937_64& rng);

// Haar-random pure state: normalized complex Gaussian vector.
Vec haar_state(int dim, std::mt19937_64& rng);

Mat haar_density(int dim, std::mt19937_64& rng);

// Random mixed state: normalized GG^dag.
Mat random_density(int dim, int rank, std::mt19937_64& rng);

// Random trace-one Hermitian matrix (not necessarily PSD).
Mat random_trace_one_hermitian(int dim, std::mt19937_64& rng);

Mat random_unitary(int dim, std::mt19937_64& rng);

// Random antilinear CP map with the given number of Kraus pairs (A_j = B_j).
AntilinearSuperOp random_antilinear_cp(int dim_in, int dim_out, int pairs,
                                       std::mt19937_64& rng);

// Random antilinear superoperator with independent A_j, B_j.
AntilinearSuperOp random_antilinear(int dim_in, int dim_out, int pairs,
                                    std::mt19937_64& rng);

// Random antilinear channel: PSD Choi from a Ginibre matrix, TP-normalized
// via J -> (I (x) T^{-1/2}) J (I (x) T^{-1/2}) with T = Tr_out J.
AntilinearSuperOp random_antilinear_channel(int dim_in, int dim_out, int rank,
                                            std::mt19937_64& rng);

}  // namespace antiq
