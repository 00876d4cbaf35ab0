#pragma once

#include "dynspec/audit.hpp"
#include "dynspec/errors.hpp"
#include "dynspec/evolution.hpp"
#include "dynspec/frenet.hpp"
#include "dynspec/numfmt.hpp"
#include "dynspec/pencil.hpp"
#include "dynspec/plasma.hpp"
#include "dynspec/serialize.hpp"
#include "dynspec/spectrum.hpp"
#include "dynspec/sweep.hpp"
