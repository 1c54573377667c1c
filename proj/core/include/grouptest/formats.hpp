#pragma once

#include <iosfwd>
#include <string>

#include "grouptest/bit_matrix.hpp"
#include "grouptest/bitvec.hpp"
#include "grouptest/support_set.hpp"

namespace gt {

// Plain-text exchange formats.  All files are ASCII, newline-terminated and
// free of trailing spaces, so identical inputs produce byte-identical files.
//
//   matrix       line 1: "GTM1 <M> <N>"; then M lines "<k> <i1> ... <ik>"
//                with the row's column indices ascending.
//   support      line 1: "GTV1 <N>"; line 2: the sorted indices.
//   observation  a single line of '0'/'1' of length M.

std::string to_gtm1(const BitMatrix& A);
BitMatrix from_gtm1(std::istream& in);

std::string to_gtv1(const SupportSet& x);
SupportSet from_gtv1(std::istream& in);

std::string to_observation(const BitVec& y);
BitVec from_observation(std::istream& in);

// File helpers; they throw FormatError on parse errors and std::runtime_error
// when the file cannot be opened.
void write_gtm1(const std::string& path, const BitMatrix& A);
BitMatrix read_gtm1(const std::string& path);
void write_gtv1(const std::string& path, const SupportSet& x);
SupportSet read_gtv1(const std::string& path);
void write_observation(const std::string& path, const BitVec& y);
BitVec read_observation(const std::string& path);

} // namespace gt
