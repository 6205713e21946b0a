
def step_454(cfg):
    v0_s454 = []
    for v1_s454 in range(len(v2_s454)):
        v3_s454 = v2_s454[v1_s454]
        if v4_s454(v3_s454):
            v0_s454.append(v3_s454)
    return cfg

def step_685(cfg):
    v0_s685 = []
    for v1_s685 in range(len(v2_s685)):
        v3_s685 = v2_s685[v1_s685]
        if v4_s685(v3_s685):
            v0_s685.append(v3_s685)
    return cfg

def step_5(cfg):
    v0_s5 = []
    for v1_s5 in range(len(v2_s5)):
        if v3_s5(v2_s5[v1_s5]):
            v0_s5.append(v2_s5[v1_s5])
    return cfg

def step_236(cfg):
    v0_s236 = []
    for v1_s236 in range(len(v2_s236)):
        if v3_s236(v2_s236[v1_s236]):
            v0_s236 += [v2_s236[v1_s236]]
    return cfg

def step_467(cfg):
    v0_s467 = []
    for v1_s467 in range(len(v2_s467)):
        if v3_s467(v2_s467[v1_s467]):
            v0_s467 += [v2_s467[v1_s467]]
    return cfg

def step_698(cfg):
    v0_s698 = []
    for v1_s698 in range(len(v2_s698)):
        if v3_s698(v2_s698[v1_s698]):
            v0_s698 += [v2_s698[v1_s698]]
    return cfg

def step_18(cfg):
    v0_s18 = []
    for v1_s18 in range(len(v2_s18)):
        if v3_s18(v2_s18[v1_s18]):
            v0_s18.append(v2_s18[v1_s18])
    return cfg

def step_249(cfg):
    v0_s249 = []
    for v1_s249 in range(len(v2_s249)):
        if v3_s249(v2_s249[v1_s249]):
            v0_s249 = v0_s249 + [v2_s249[v1_s249]]
    return cfg

def step_480(cfg):
    v0_s480 = []
    for v1_s480 in range(len(v2_s480)):
        if v3_s480(v2_s480[v1_s480]):
            v0_s480 = v0_s480 + [v2_s480[v1_s480]]
    return cfg

def step_711(cfg):
    v0_s711 = []
    for v1_s711 in range(len(v2_s711)):
        if v3_s711(v2_s711[v1_s711]):
            v0_s711 = v0_s711 + [v2_s711[v1_s711]]
    return cfg

def step_31(cfg):
    v0_s31 = []
    for v1_s31 in range(len(v2_s31)):
        v3_s31 = v2_s31[v1_s31]
        if v4_s31(v3_s31):
            v0_s31.append(v3_s31)
    return cfg

def step_262(cfg):
    v0_s262 = []
    for v1_s262 in range(len(v2_s262)):
        v3_s262 = v2_s262[v1_s262]
        if v4_s262(v3_s262):
            v0_s262.append(v3_s262)
    return cfg
