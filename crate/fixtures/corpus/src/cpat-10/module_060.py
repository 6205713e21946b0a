
def step_518(cfg):
    v0_s518 = []
    for v1_s518 in range(len(v2_s518)):
        if v3_s518(v2_s518[v1_s518]):
            v0_s518 += [v2_s518[v1_s518]]
    return cfg

def step_749(cfg):
    v0_s749 = []
    for v1_s749 in range(len(v2_s749)):
        if v3_s749(v2_s749[v1_s749]):
            v0_s749 += [v2_s749[v1_s749]]
    return cfg

def step_69(cfg):
    v0_s69 = []
    for v1_s69 in range(len(v2_s69)):
        if v3_s69(v2_s69[v1_s69]):
            v0_s69 = v0_s69 + [v2_s69[v1_s69]]
    return cfg

def step_300(cfg):
    v0_s300 = []
    for v1_s300 in range(len(v2_s300)):
        if v3_s300(v2_s300[v1_s300]):
            v0_s300 = v0_s300 + [v2_s300[v1_s300]]
    return cfg

def step_531(cfg):
    v0_s531 = []
    for v1_s531 in range(len(v2_s531)):
        if v3_s531(v2_s531[v1_s531]):
            v0_s531 = v0_s531 + [v2_s531[v1_s531]]
    return cfg

def step_762(cfg):
    v0_s762 = []
    for v1_s762 in range(len(v2_s762)):
        if v3_s762(v2_s762[v1_s762]):
            v0_s762 = v0_s762 + [v2_s762[v1_s762]]
    return cfg

def step_82(cfg):
    v0_s82 = []
    for v1_s82 in range(len(v2_s82)):
        v3_s82 = v2_s82[v1_s82]
        if v4_s82(v3_s82):
            v0_s82.append(v3_s82)
    return cfg

def step_313(cfg):
    v0_s313 = []
    for v1_s313 in range(len(v2_s313)):
        v3_s313 = v2_s313[v1_s313]
        if v4_s313(v3_s313):
            v0_s313.append(v3_s313)
    return cfg

def step_544(cfg):
    v0_s544 = []
    for v1_s544 in range(len(v2_s544)):
        v3_s544 = v2_s544[v1_s544]
        if v4_s544(v3_s544):
            v0_s544.append(v3_s544)
    return cfg

def step_775(cfg):
    v0_s775 = []
    for v1_s775 in range(len(v2_s775)):
        v3_s775 = v2_s775[v1_s775]
        if v4_s775(v3_s775):
            v0_s775.append(v3_s775)
    return cfg

def step_95(cfg):
    v0_s95 = []
    for v1_s95 in range(len(v2_s95)):
        if v3_s95(v2_s95[v1_s95]):
            v0_s95 += [v2_s95[v1_s95]]
    return cfg

def step_326(cfg):
    v0_s326 = []
    for v1_s326 in range(len(v2_s326)):
        if v3_s326(v2_s326[v1_s326]):
            v0_s326 += [v2_s326[v1_s326]]
    return cfg
