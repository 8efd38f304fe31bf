#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/run.hpp"

#include <exception>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    for (const auto& a : args) {
        if (a == "--help" || a == "-h") {
            std::cout << "usage: qwalk [--config FILE] [--walk homogeneous|accelerated|temporal|spatial|classical]\n"
                         "             [--steps N] [--theta0 ANGLE] [--accel A] [--trials N] [--seed S]\n"
                         "             [--observables prob,msd,alpha,l1,re] [--fit-window TMIN,TMAX]\n"
                         "             [--output PATH|-] [--format csv|json] [--distribution-output PATH]\n"
                         "             [--drop-zeros] [--threads N]\n";
            return 0;
        }
    }
    try {
        const qwalk::RunConfig config = qwalk::parse_config(args);
        qwalk::run_and_emit(config, std::cerr);
    } catch (const qwalk::UsageError& e) {
        std::cerr << "qwalk: usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qwalk: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
