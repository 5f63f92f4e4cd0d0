#pragma once

namespace qwom {

enum class Method { RK4Fixed, RK45Adaptive, EulerMaruyama };

struct IntegratorSettings {
    Method method = Method::RK45Adaptive;
    double h = 1e-3;        // initial (adaptive) or fixed step size
    double rel_tol = 1e-9;
    double abs_tol = 1e-9;
    double h_min = 1e-12;
    double h_max = 0.1;
};

}  // namespace qwom
