#pragma once

#include "symtrop/certify.hpp"

namespace symtrop::acceptance {

// The ten go/no-go checks, one result per criterion.
Report run_all();

}  // namespace symtrop::acceptance
