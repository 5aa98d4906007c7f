#pragma once

#include "twobridge/error.hpp"
#include "twobridge/conway.hpp"
#include "twobridge/fraction.hpp"
#include "twobridge/plat_diagram.hpp"
#include "twobridge/normalize.hpp"
#include "twobridge/curve.hpp"
#include "twobridge/strips.hpp"
#include "twobridge/cross_section.hpp"
#include "twobridge/stable_map.hpp"
#include "twobridge/complexity.hpp"
#include "twobridge/volume_table.hpp"
#include "twobridge/json_io.hpp"
#include "twobridge/svg.hpp"
