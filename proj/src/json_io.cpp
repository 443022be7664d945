#include "resforge/json_io.hpp"
// placeholder translation unit
