#pragma once

#include "symtern/checks.hpp"
#include "symtern/core.hpp"
#include "symtern/error.hpp"
#include "symtern/oracle.hpp"
#include "symtern/quartets.hpp"
#include "symtern/reconstruct.hpp"
#include "symtern/selftest.hpp"
#include "symtern/table.hpp"
#include "symtern/tree.hpp"
