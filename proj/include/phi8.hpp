#pragma once

#include "phi8/field.hpp"
#include "phi8/literal.hpp"
#include "phi8/matrix.hpp"
#include "phi8/constants.hpp"
#include "phi8/identities.hpp"
#include "phi8/roots.hpp"
#include "phi8/lattice.hpp"
#include "phi8/hull.hpp"
#include "phi8/projection.hpp"
#include "phi8/report_json.hpp"
