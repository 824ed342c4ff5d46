#pragma once

#include "wa/checkers.hpp"
#include "wa/function.hpp"
#include "wa/growth.hpp"
#include "wa/representation.hpp"
