"""Published reference values used by ``verify`` and the test-suite."""

# gamma^M_n, n = 0..10, as printed (31 significant digits, truncated)
TABLE1 = (
    "1.043894515711938297404563438509",
    "0.236152886477122974860578286060",
    "0.319384120408014249249465207074",
    "0.501294458741649566645935631332",
    "1.010739722784850417039579626049",
    "2.544030257932552280334481508980",
    "7.666100995112318690725728704276",
    "26.88797470534219199661349019865",
    "107.6566910334506652692812639473",
    "484.6934692784684121614213582581",
    "2424.080089640181055133479838894",
)
GAMMA_M = "1.04389451571193829740"
GAMMA_BAR_M = "0.53524615263113376955"
EULER_GAMMA = "0.57721566490153286060"
ZETA_HALF = "-1.4603545088"
RATIO_AT_0_8 = "-1.9413794172"
CONTINUATION_0_8_AT_1E8 = "-1.94138634"
CONTINUATION_0_5_AT_1E8 = "-0.00173997"
