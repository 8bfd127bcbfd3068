"""Size the platform: endurance, stop budgets, and the two solvers.

Shows how long the battery holds a hover, how many stops fit at a given
dwell, what transmit power banks a packet target in one visit, and what
cruise speed squeezes a stop plan into the endurance.
"""

from dataclasses import replace

from wpcnsim import ScenarioConfig, calibrate_speed, calibrate_tx_power, endurance, max_stops


def main():
    base = ScenarioConfig()
    seconds = endurance(base)
    print(f"battery {base.uav_battery:.0f} J at {base.uav_flight_power:.1f} W "
          f"-> endurance {seconds:.1f} s ({seconds / 60:.1f} min)")
    print()

    print("stop budget vs dwell (one full loop plus hovering)")
    for dwell in (10.0, 20.0, 40.0, 70.0):
        fit = max_stops(base, dwell)
        print(f"  dwell {dwell:4.0f} s -> {fit:3d} stops")
    # transmitting during the charge phase costs extra and shrinks the budget
    billed = replace(base, wpt_draw_mode="additional")
    print(f"  dwell   20 s -> {max_stops(billed, 20.0):3d} stops when wpt power is billed")
    print()

    print("transmit power for a per-visit packet target")
    for target in (1, 2, 5, 10):
        tx = calibrate_tx_power(target, base)
        print(f"  {target:2d} packets -> {tx:.4f} W")
    print()

    print("cruise speed that fits a stop plan into the endurance")
    for stops, dwell in ((80, 20.0), (22, 70.0)):
        speed = calibrate_speed(stops, dwell, base)
        print(f"  {stops} stops at {dwell:.0f} s -> {speed:.4f} m/s")
    try:
        calibrate_speed(1000, 20.0, base)
    except ValueError as err:
        print(f"  1000 stops at 20 s -> no solution ({err})")


if __name__ == "__main__":
    main()
