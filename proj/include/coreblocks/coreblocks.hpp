#pragma once

#include "coreblocks/abacus.hpp"
#include "coreblocks/blocks.hpp"
#include "coreblocks/blockvector.hpp"
#include "coreblocks/bounds.hpp"
#include "coreblocks/common.hpp"
#include "coreblocks/enumerate.hpp"
#include "coreblocks/multipartition.hpp"
#include "coreblocks/partition.hpp"
#include "coreblocks/residues.hpp"
#include "coreblocks/rimhook.hpp"
#include "coreblocks/shift.hpp"
