#pragma once

#include "ssp/interaction.hpp"
#include "ssp/transition_system.hpp"
#include "ssp/region.hpp"
#include "ssp/classify.hpp"
#include "ssp/engine.hpp"
#include "ssp/oracle.hpp"
#include "ssp/cm_formula.hpp"
#include "ssp/nop_inp_reduction.hpp"
#include "ssp/nop_free_reduction.hpp"
#include "ssp/extensions.hpp"
#include "ssp/ts_format.hpp"
#include "ssp/report_json.hpp"
#include "ssp/random_ts.hpp"
#include "ssp/verify.hpp"
