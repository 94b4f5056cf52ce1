#ifndef CYCLOCODES_CYCLOCODES_HPP
#define CYCLOCODES_CYCLOCODES_HPP

#include "codecore.hpp"
#include "constructions.hpp"
#include "cosets.hpp"
#include "distance.hpp"
#include "error.hpp"
#include "gf2.hpp"
#include "report.hpp"

#endif  // CYCLOCODES_CYCLOCODES_HPP
