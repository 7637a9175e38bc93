#pragma once

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "lucas.hpp"
#include "numtheory.hpp"
#include "parity_witness.hpp"
#include "report_json.hpp"
#include "square_hunter.hpp"
#include "symbol_laws.hpp"
#include "version.hpp"
