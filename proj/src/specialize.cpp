#include "resforge/specialize.hpp"
// placeholder translation unit
