#pragma once

// Flat `key = value` configuration files. `#` starts a comment; blank lines
// are ignored; keys are case sensitive and may appear once.
//
// Sweep keys:
//   swept          a_H | R_hot | delta_E
//   min, max       grid bounds
//   count          number of grid points (>= 2)
//   spacing        linear | log                      (default linear)
//   v              speed
//   a_H | R_hot    hot circle, when delta_E is swept
//   a_C | R_cold   cold circle
//   E1             lower gap                         (default 1 when needed)
//   E2 | delta_E   upper gap, directly or as E1 + delta_E
//   p              initial population or `cyc`       (default cyc)
//   series         p | v | a_H
//   series_values  comma separated list
//   outputs        comma separated: delta_p_H, p_cyc, W_ext, efficiency,
//                  ledger, T_H, T_C, gamma
//   oracle_check   true | false
//   decoupled_T    true | false; needs T_H
//   T_H            fixed hot-contact duration
//   name           free text label
//
// Cycle keys: v, a_H | R_hot, a_C | R_cold, E1, E2, p.

#include <iosfwd>
#include <map>
#include <string>

#include "cuqoe/engine.hpp"
#include "cuqoe/sweep.hpp"

namespace cuqoe {

using KeyValues = std::map<std::string, std::string>;

/// Throws ConfigError on malformed lines or duplicate keys.
KeyValues parse_key_values(std::istream& in);
KeyValues read_key_values(const std::string& path);

SweepSpec sweep_spec_from(const KeyValues& kv);
CycleConfig cycle_config_from(const KeyValues& kv);

}  // namespace cuqoe
