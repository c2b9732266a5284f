#pragma once

#include "blobrep/diagrams.hpp"
#include "blobrep/faithful.hpp"
#include "blobrep/json_io.hpp"
#include "blobrep/parallel.hpp"
#include "blobrep/rank.hpp"
#include "blobrep/rings.hpp"
#include "blobrep/tensorrep.hpp"
#include "blobrep/walks.hpp"
#include "blobrep/words.hpp"
