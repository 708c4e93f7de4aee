#pragma once

#include "minorb/battery.hpp"
#include "minorb/cartan.hpp"
#include "minorb/lie_type.hpp"
#include "minorb/linalg.hpp"
#include "minorb/orbit.hpp"
#include "minorb/orthonormal.hpp"
#include "minorb/rational.hpp"
#include "minorb/report_format.hpp"
#include "minorb/root_system.hpp"
#include "minorb/weyl.hpp"
