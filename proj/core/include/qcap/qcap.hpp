#pragma once

#include "qcap/bounds.hpp"
#include "qcap/certify.hpp"
#include "qcap/channel.hpp"
#include "qcap/coherent_info.hpp"
#include "qcap/crosscheck.hpp"
#include "qcap/density.hpp"
#include "qcap/entropy.hpp"
#include "qcap/json_io.hpp"
#include "qcap/layout.hpp"
#include "qcap/ops.hpp"
#include "qcap/pdit.hpp"
#include "qcap/random.hpp"
#include "qcap/sweep.hpp"
