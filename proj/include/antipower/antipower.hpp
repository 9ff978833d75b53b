#pragma once

#include "antipower/distinct_window.hpp"
#include "antipower/naming.hpp"
#include "antipower/oracle.hpp"
#include "antipower/search.hpp"
#include "antipower/text.hpp"
#include "antipower/witness.hpp"
