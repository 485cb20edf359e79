#pragma once

#include "corecc/choice.hpp"
#include "corecc/cli.hpp"
#include "corecc/coiter.hpp"
#include "corecc/control.hpp"
#include "corecc/corec_c.hpp"
#include "corecc/corec_m.hpp"
#include "corecc/eff_stream.hpp"
#include "corecc/ipp.hpp"
#include "corecc/laws.hpp"
#include "corecc/stream.hpp"
#include "corecc/stream_spec.hpp"
