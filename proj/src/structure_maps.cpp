#include "resforge/structure_maps.hpp"
// placeholder translation unit
