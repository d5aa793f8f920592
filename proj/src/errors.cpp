#include "aialo/errors.hpp"

namespace aialo {

void throw_validation(const std::string& what) { throw ValidationError(what); }

}  // namespace aialo
