#ifndef HFZF_SELFTEST_HPP
#define HFZF_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hfzf::selftest {

// Suites: core, fixedpoint, recursion, datatypes, logic, all. Each prints
// one line per property (deterministic for a fixed seed) and returns true
// when everything holds; the first counterexample is printed.
bool run(const std::string& suite, std::uint64_t seed, std::ostream& out);

const std::vector<std::string>& suite_names();

}  // namespace hfzf::selftest

#endif
