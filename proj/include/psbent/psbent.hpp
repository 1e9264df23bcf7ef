#pragma once

#include "psbent/bigint.hpp"
#include "psbent/construct.hpp"
#include "psbent/cyclotomic.hpp"
#include "psbent/field.hpp"
#include "psbent/function_table.hpp"
#include "psbent/group.hpp"
#include "psbent/json_io.hpp"
#include "psbent/spread.hpp"
#include "psbent/verify.hpp"
