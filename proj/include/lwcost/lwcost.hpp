#pragma once
#include "ciphers/make_aead.hpp"
#include "cost_model/registry_json.hpp"
#include "schedule/plan_json.hpp"
#include "ciphers/kat.hpp"
#include "validation/report.hpp"
