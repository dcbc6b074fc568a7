#pragma once

#include "subseq/subseq.hpp"

namespace testing_util {

inline subseq::Formula F(std::string_view s) { return subseq::parse_formula(s); }
inline subseq::Sequent S(std::string_view s) { return subseq::parse_sequent(s); }

}  // namespace testing_util
