#pragma once

#include "modlab/classifier.hpp"
#include "modlab/cogeneration.hpp"
#include "modlab/corpus.hpp"
#include "modlab/firstness.hpp"
#include "modlab/module_action.hpp"
#include "modlab/order/sweep.hpp"
#include "modlab/preradical_props.hpp"
