#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frl {

inline constexpr const char* kVersion = "frl 1.0.0";
inline constexpr int kConfigSchemaVersion = 1;

// args excludes the program name. Returns 0 on success, 2 on validation errors, 1 on computational errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace frl
