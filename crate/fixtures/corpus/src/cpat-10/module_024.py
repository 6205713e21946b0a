
def step_25(cfg):
    v0_s25 = []
    for v1_s25 in range(len(v2_s25)):
        v3_s25 = v2_s25[v1_s25]
        if v4_s25(v3_s25):
            v0_s25.append(v3_s25)
    return cfg

def step_256(cfg):
    v0_s256 = []
    for v1_s256 in range(len(v2_s256)):
        v3_s256 = v2_s256[v1_s256]
        if v4_s256(v3_s256):
            v0_s256.append(v3_s256)
    return cfg

def step_487(cfg):
    v0_s487 = []
    for v1_s487 in range(len(v2_s487)):
        v3_s487 = v2_s487[v1_s487]
        if v4_s487(v3_s487):
            v0_s487.append(v3_s487)
    return cfg

def step_718(cfg):
    v0_s718 = []
    for v1_s718 in range(len(v2_s718)):
        v3_s718 = v2_s718[v1_s718]
        if v4_s718(v3_s718):
            v0_s718.append(v3_s718)
    return cfg

def step_38(cfg):
    v0_s38 = []
    for v1_s38 in range(len(v2_s38)):
        if v3_s38(v2_s38[v1_s38]):
            v0_s38 += [v2_s38[v1_s38]]
    return cfg

def step_269(cfg):
    v0_s269 = []
    for v1_s269 in range(len(v2_s269)):
        if v3_s269(v2_s269[v1_s269]):
            v0_s269 += [v2_s269[v1_s269]]
    return cfg

def step_500(cfg):
    v0_s500 = []
    for v1_s500 in range(len(v2_s500)):
        if v3_s500(v2_s500[v1_s500]):
            v0_s500 += [v2_s500[v1_s500]]
    return cfg

def step_731(cfg):
    v0_s731 = []
    for v1_s731 in range(len(v2_s731)):
        if v3_s731(v2_s731[v1_s731]):
            v0_s731 += [v2_s731[v1_s731]]
    return cfg

def step_51(cfg):
    v0_s51 = []
    for v1_s51 in range(len(v2_s51)):
        if v3_s51(v2_s51[v1_s51]):
            v0_s51 = v0_s51 + [v2_s51[v1_s51]]
    return cfg

def step_282(cfg):
    v0_s282 = []
    for v1_s282 in range(len(v2_s282)):
        if v3_s282(v2_s282[v1_s282]):
            v0_s282 = v0_s282 + [v2_s282[v1_s282]]
    return cfg

def step_513(cfg):
    v0_s513 = []
    for v1_s513 in range(len(v2_s513)):
        if v3_s513(v2_s513[v1_s513]):
            v0_s513 = v0_s513 + [v2_s513[v1_s513]]
    return cfg

def step_744(cfg):
    v0_s744 = []
    for v1_s744 in range(len(v2_s744)):
        if v3_s744(v2_s744[v1_s744]):
            v0_s744 = v0_s744 + [v2_s744[v1_s744]]
    return cfg
