#pragma once

#include <string>
#include <string_view>

#include "phv/module.hpp"

namespace phv {

/// Parses a module expression, e.g.
///
///   GL1^2 x SL4 x SL2 : (w2 # w1) + (w1 # 1) + (w1 # 1)
///   GL1 x SL3 : w1 + w1 + w1
///   GL1^2 x SL2 : 2w1@1 + w1@1,2
///
/// GL_n (n >= 2) is desugared to one torus slot plus SL_n; SO_n/Spin_n map to
/// B_{(n-1)/2} or D_{n/2}; Sp_n is C_n. A trailing '*' on a representation
/// takes the dual. Scalar slots come from '@' tags (1-based, '@0' for none);
/// without tags, a single GL1 acts on every summand, GL1^k with k summands
/// acts slot-per-summand, and otherwise the first min(k, #summands) summands
/// get one slot each. Throws phv::ParseError.
Module parse_module(std::string_view text);

/// Inverse of parse_module: parse_module(format_module(m)) == m. Tags are
/// written only when the defaults would not reproduce the slots, and always
/// when the group has no simple factor.
std::string format_module(const Module& module);

/// "SL4", "Sp2", "SO10", "E6", ...
std::string factor_name(const SimpleFactor& factor);

/// "1", "3w1", "w1,w3", ...
std::string format_weight(const HighestWeight& weight);

}  // namespace phv
