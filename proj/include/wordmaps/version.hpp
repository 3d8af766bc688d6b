#pragma once

#define WORDMAPS_VERSION "0.1.0"
