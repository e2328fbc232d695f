#ifndef QCBOUND_QCBOUND_HPP
#define QCBOUND_QCBOUND_HPP

// Everything except the command-line front end.

#include "qcbound/error.hpp"
#include "qcbound/linalg.hpp"
#include "qcbound/random.hpp"
#include "qcbound/states.hpp"
#include "qcbound/channels.hpp"
#include "qcbound/divergences.hpp"
#include "qcbound/sdp.hpp"
#include "qcbound/report.hpp"
#include "qcbound/sdp_bounds.hpp"
#include "qcbound/bounds.hpp"
#include "qcbound/json_io.hpp"
#include "qcbound/verify.hpp"

#endif  // QCBOUND_QCBOUND_HPP
